from pydantic import StrictInt, StrictStr


PointId = StrictStr | StrictInt
