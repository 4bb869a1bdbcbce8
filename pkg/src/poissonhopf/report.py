#!/usr/bin/env python
'''
report

Check results. A failed check is data, never an exception: every
verifier returns a Report whose entries print as

    CHECK <name>: PASS
    CHECK <name>[<label>]: FAIL residual=<expr>

and mirror to JSON objects with the fields name/status/residual/millis.
'''

import json
import logging
import time

log = logging.getLogger(__name__)


class CheckResult(object):

    __slots__ = ('name', 'passed', 'residual', 'millis')

    def __init__(self, name, passed, residual=None, millis=None):
        self.name = name
        self.passed = bool(passed)
        self.residual = residual
        self.millis = millis

    def line(self):
        if self.passed:
            return 'CHECK %s: PASS' % self.name
        return 'CHECK %s: FAIL residual=%s' % (self.name, self.residual)

    def to_dict(self, timing=False):
        return {
            'name': self.name,
            'status': 'pass' if self.passed else 'fail',
            'residual': None if self.passed else self.residual,
            'millis': self.millis if timing else None,
        }

    def __repr__(self):
        return self.line()


class Report(object):

    '''
    Ordered list of CheckResults; sub-reports are flattened on extend.
    Extra, non-check output (tables, values) goes to `notes`.
    '''

    def __init__(self, results=None):
        self.results = list(results or [])
        self.notes = []

    def add(self, result):
        self.results.append(result)
        return self

    def extend(self, other):
        self.results.extend(other.results)
        self.notes.extend(other.notes)
        return self

    def note(self, text):
        self.notes.append(text)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]

    def __iter__(self):
        return iter(self.results)

    def __len__(self):
        return len(self.results)

    def __getitem__(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def names(self):
        return [r.name for r in self.results]

    def lines(self):
        return [r.line() for r in self.results]

    def text(self):
        return '\n'.join(self.notes + self.lines())

    def to_json(self, timing=False):
        return [r.to_dict(timing) for r in self.results]

    def dumps(self, timing=False):
        return json.dumps({'checks': self.to_json(timing), 'notes': self.notes}, indent=1)

    def __repr__(self):
        return 'Report(%d checks, %s)' % (len(self.results), 'pass' if self.passed else 'FAIL')


class Check(object):

    '''
    Builder for the entries of one named check.

    **Arguments:**

    - name -> STR: check name; failing entries are reported as name[label]
    - report -> Report: collecting report (a fresh one if omitted)
    '''

    def __init__(self, name, report=None):
        self.name = name
        self._report = report if report is not None else Report()
        self._failures = []
        self._start = time.perf_counter()
        self.count = 0

    def verify(self, label, residual):
        '''Record a failure when residual is nonzero; return True when zero.'''
        self.count += 1
        if not residual:
            return True
        self.fail(label, residual)
        return False

    def equal(self, label, lhs, rhs):
        return self.verify(label, lhs - rhs)

    def fail(self, label, residual):
        name = '%s[%s]' % (self.name, label) if label is not None else self.name
        log.debug('%s failed: %s', name, residual)
        self._failures.append(CheckResult(name, False, str(residual)))

    @property
    def passed(self):
        return not self._failures

    def report(self):
        millis = int(round(1000 * (time.perf_counter() - self._start)))
        if self._failures:
            for f in self._failures:
                f.millis = millis
                self._report.add(f)
        else:
            self._report.add(CheckResult(self.name, True, None, millis))
        log.info('check %s: %s (%d cases)', self.name, 'pass' if self.passed else 'FAIL', self.count)
        return self._report
