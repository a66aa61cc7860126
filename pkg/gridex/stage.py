import asyncio
import functools
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Optional

from .models import RunStatus, StageRun


class Stage:
    __slots__ = (
        "name",
        "status",
        "error",
        "trace",
        "start",
        "end",
        "elapsed",
        "timeout",
        "timed_out",
        "call",
        "result",
        "_executor",
        "_semaphore",
    )

    def __init__(
        self,
        name: str,
        call: Callable[..., Any],
        executor: ThreadPoolExecutor,
        semaphore: asyncio.Semaphore,
        timeout: Optional[int | float] = None,
    ) -> None:
        self.name = name
        self.status = RunStatus.CREATED

        self.error: Optional[str] = None
        self.trace: Optional[str] = None
        self.start = time.monotonic()
        self.end = 0
        self.elapsed = 0
        self.timeout = timeout
        self.timed_out = False

        self.call = call
        self.result: Any | None = None
        self._executor = executor
        self._semaphore = semaphore

    def update_status(self, status: RunStatus):
        self.status = status
        self.elapsed = time.monotonic() - self.start

    async def execute(self, *args, **kwargs) -> StageRun:
        loop = asyncio.get_running_loop()
        self.update_status(RunStatus.PENDING)

        try:
            async with self._semaphore:
                self.update_status(RunStatus.RUNNING)
                future = loop.run_in_executor(
                    self._executor, functools.partial(self.call, *args, **kwargs)
                )

                if self.timeout:
                    self.result = await asyncio.wait_for(future, timeout=self.timeout)

                else:
                    self.result = await future

            self.status = RunStatus.COMPLETE

        except asyncio.TimeoutError:
            self.timed_out = True
            self.error = f"Err. - Stage - {self.name} - timed out. Exceeded deadline of - {self.timeout} - seconds."
            self.status = RunStatus.FAILED

        except Exception as e:
            self.error = f"Err. - Stage - {self.name} - failed. Encountered exception - {str(e)}."
            self.trace = traceback.format_exc()
            self.status = RunStatus.FAILED

        self.end = time.monotonic()
        self.elapsed = self.end - self.start

        return StageRun(
            stage=self.name,
            status=self.status,
            error=self.error,
            trace=self.trace,
            start=self.start,
            end=self.end,
            elapsed=self.elapsed,
            timed_out=self.timed_out,
            result=self.result,
        )
