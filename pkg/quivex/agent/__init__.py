# Copyright 2026 quivex project team.
# All rights reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import logging

from oslo_config import cfg

from quivex import version, log
from quivex import config  # noqa: registers the option groups
from quivex.agent import commands  # noqa: registers the command option


log.early_init_log(logging.WARNING)

CONF = cfg.CONF

LOG = logging.getLogger(__name__)


def prepare_service(args=None):
    try:
        CONF(args=args, project='quivex', version=version,
             default_config_files=['/etc/quivex/quivex.ini'])
    except cfg.ConfigFilesNotFoundError:
        CONF(args=args, project='quivex', version=version, default_config_files=[])

    log.init_log()
    LOG.debug('Log (Re)opened.')
    LOG.debug("Configuration:")
    cfg.CONF.log_opt_values(LOG, logging.DEBUG)


def run_command():
    """run the parsed sub-command and write its report"""
    LOG.info('running command %s', CONF.command.name)
    result = CONF.command.func()
    if CONF.command.report_file:
        result.write(CONF.command.report_file, CONF.output.format, CONF.output.float_digits, CONF.output.dir)
    return result
