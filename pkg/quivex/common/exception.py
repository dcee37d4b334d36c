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

""" quivex Exception """

_FATAL_EXCEPTION_FORMAT_ERRORS = False

EXIT_DOMAIN_ERROR = 1
EXIT_BUDGET_ERROR = 2


class QuivexException(Exception):
    """Base quivex Exception.

    Subclasses set ``message`` to a %-format string which is filled from the
    keyword arguments given to the constructor. The keyword arguments are kept
    as attributes so callers can inspect them.
    """
    message = "An unknown exception occurred."
    exit_code = EXIT_DOMAIN_ERROR

    def __init__(self, **kwargs):
        self.kwargs = kwargs
        for key, value in kwargs.items():
            setattr(self, key, value)
        try:
            self.msg = self.message % kwargs
        except Exception:
            if _FATAL_EXCEPTION_FORMAT_ERRORS:
                raise
            # at least get the core message out if something happened
            self.msg = self.message
        super(QuivexException, self).__init__(self.msg)

    @property
    def name(self):
        return self.__class__.__name__

    def __str__(self):
        return self.msg


class CyclicQuiver(QuivexException):
    message = "Quiver has an oriented cycle through %(vertices)s"


class MalformedInput(QuivexException):
    message = "Malformed input: %(reason)s"


class IndexMismatch(QuivexException):
    message = "Vector of length %(got)s does not match %(expected)s vertices"


class NotBelow(QuivexException):
    message = "%(e)s is not componentwise below %(d)s"


class ZeroVector(QuivexException):
    message = "Operation %(what)s is undefined on the zero vector"


class KappaNotPositive(QuivexException):
    message = "Functional kappa is not positive at vertex %(vertex)s (value %(value)s)"


class Disconnected(QuivexException):
    message = "Quiver is not connected (%(components)s components)"


class NotWild(QuivexException):
    message = "Quiver is of type %(kind)s, a wild quiver is required"


class NotInterior(QuivexException):
    message = "%(d)s is not in the interior of the fundamental domain, (d,i) = %(values)s"


class GammaTooLarge(QuivexException):
    message = "gamma = %(gamma)s does not stay below the threshold %(threshold)s"


class SearchExhausted(QuivexException):
    message = "No certified dimension vector found up to t = %(cap)s"


class DynkinInput(QuivexException):
    message = "Quiver is of Dynkin type; the Coxeter orbit data needs a non-Dynkin quiver"


class NotPrime(QuivexException):
    message = "%(p)s is not a prime number"


class OutOfRange(QuivexException):
    message = "%(name)s = %(value)s is outside %(allowed)s"


class NotApplicable(QuivexException):
    message = "%(what)s is not applicable: %(reason)s"


class BudgetExceeded(QuivexException):
    exit_code = EXIT_BUDGET_ERROR
    message = "%(what)s needs %(size)s items, budget is %(budget)s"
