from .time_parser import TimeParser as TimeParser
