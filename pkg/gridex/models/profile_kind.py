from enum import Enum


class ProfileKind(Enum):
    ROW = 'row'
    COLUMN = 'column'
