# Observer Pattern - Simple notifications for selftest results
import logging
from collections import Counter

logger = logging.getLogger(__name__)


class Observer:
    """Base class for anything that wants to hear about property results"""

    def update(self, prop, case, passed, detail=""):
        pass


class LoggingObserver(Observer):
    """Logs failures as warnings and everything else at debug level"""

    def update(self, prop, case, passed, detail=""):
        if passed:
            logger.debug("%s case %d passed", prop, case)
        else:
            logger.warning("%s case %d FAILED: %s", prop, case, detail)


class TallyObserver(Observer):
    """Counts passes and failures per property"""

    def __init__(self):
        self.passed = Counter()
        self.failed = Counter()
        self.failures = []

    def update(self, prop, case, passed, detail=""):
        if passed:
            self.passed[prop] += 1
        else:
            self.failed[prop] += 1
            self.failures.append({"property": prop, "case": case, "detail": detail})

    def summary(self):
        names = sorted(set(self.passed) | set(self.failed))
        return {name: {"passed": self.passed[name], "failed": self.failed[name]} for name in names}

    def all_passed(self):
        return not self.failures


class ResultNotifier:
    """Keeps track of observers and notifies them"""

    def __init__(self):
        self.observers = []

    def add_observer(self, observer):
        self.observers.append(observer)

    def remove_observer(self, observer):
        self.observers.remove(observer)

    def notify_all(self, prop, case, passed, detail=""):
        for observer in self.observers:
            observer.update(prop, case, passed, detail)
