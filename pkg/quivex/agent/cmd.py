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

"""start service"""

import sys

from quivex.agent import prepare_service, run_command
from quivex.common import exception as excep


def main(argv=None):
    """
    :return: 0 on success, 1 on domain errors, 2 on budget errors
    """
    prepare_service(argv)
    try:
        run_command()
    except excep.QuivexException as e:
        print('%s: %s' % (e.name, e), file=sys.stderr)
        return e.exit_code
    return 0


if __name__ == '__main__':
    sys.exit(main())
