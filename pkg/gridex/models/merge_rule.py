from enum import Enum


class MergeRule(Enum):
    LEAST_SUM = 'least-sum'
    LEAST_ABS_DIFF = 'least-abs-diff'
