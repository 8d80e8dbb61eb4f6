"""
Abstract ThreadedWorkers class handles evaluating independent computations
concurrently using threads.
"""
import logging
import time
import concurrent.futures as cf
from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, Iterable, List, Optional

from src.models.exceptions import HoleyTilingError


class ThreadedWorkers(ABC):
    """
    ThreadedWorkers class handles running tasks concurrently using threads.
    """

    @abstractmethod
    def run_threaded_tasks(self) -> Any:
        """
        Abstract method to define the execution of threaded tasks.

        Returns:
            The results of the threaded tasks.
        """
        pass

    @abstractmethod
    def log_completion(self):
        """
        Abstract method to log the completion of a process.
        """
        pass


class GridThreadedWorker(ThreadedWorkers):
    """
    GridThreadedWorker evaluates one function over a grid of independent inputs.

    Results come back in the order of the inputs.
    """

    def __init__(
        self,
        task_func: Callable,
        data_to_process: Iterable,
        max_workers: Optional[int] = None,
        **kwargs,
    ):
        super().__init__()
        self._data_to_process = list(data_to_process)
        self._task_func = task_func
        self._max_workers = max_workers
        self._kwargs = kwargs
        self._elapsed: float = 0.0

    def run_threaded_tasks(self) -> List[Any]:
        """
        Run the function on every grid point using a thread pool executor.

        Returns:
            List[Any]: One result per grid point, in input order.

        Raises:
            RuntimeError: If an error occurs during task execution. The
                original error is kept as ``__cause__``.
        """
        start_time: float = time.perf_counter()
        try:
            logging.info(
                "Received grid: %s. Running function: %s.",
                self._data_to_process,
                getattr(self._task_func, "__name__", self._task_func),
            )
            with cf.ThreadPoolExecutor(max_workers=self._max_workers) as executor:
                result_futures: List[cf.Future] = [
                    executor.submit(self._task_func, data, **self._kwargs)
                    for data in self._data_to_process
                ]
            results = [future.result() for future in result_futures]
            self._elapsed = time.perf_counter() - start_time
            self.log_completion()
            return results

        except Exception as error:
            logging.warning("An error occurred: %s", error)
            raise RuntimeError(f"Some error: {error}") from error

    def log_completion(self):
        logging.info(
            "Done %s grid tasks, took %s second(s) to finish.",
            len(self._data_to_process),
            round(self._elapsed, 2),
        )


class SuiteThreadedWorker(ThreadedWorkers):
    """
    SuiteThreadedWorker runs named, argument-free jobs side by side.
    """

    def __init__(self, jobs: Dict[str, Callable[[], Any]], max_workers: Optional[int] = None):
        super().__init__()
        self._jobs = dict(jobs)
        self._max_workers = max_workers
        self._elapsed: float = 0.0

    def run_threaded_tasks(self) -> Dict[str, Any]:
        """
        Run every job using a thread pool executor.

        Returns:
            Dict[str, Any]: Job name to result.

        Raises:
            RuntimeError: If a job raises. The original error is kept as
                ``__cause__``.
        """
        start_time: float = time.perf_counter()
        try:
            logging.info("Received jobs: %s. Running threaded tasks.", sorted(self._jobs))
            with cf.ThreadPoolExecutor(max_workers=self._max_workers) as executor:
                result_futures: Dict[str, cf.Future] = {
                    name: executor.submit(job) for name, job in self._jobs.items()
                }
            results = {name: future.result() for name, future in result_futures.items()}
            self._elapsed = time.perf_counter() - start_time
            self.log_completion()
            return results

        except Exception as error:
            logging.warning("An error occurred: %s", error)
            raise RuntimeError(f"Some error: {error}") from error

    def log_completion(self):
        logging.info("Done %s jobs, took %s second(s) to finish.", len(self._jobs), round(self._elapsed, 2))


def reraise_cause(error: RuntimeError):
    """
    Re-raise the package error wrapped by a worker pool, or the wrapper itself
    when the cause came from elsewhere.
    """
    if isinstance(error.__cause__, HoleyTilingError):
        raise error.__cause__ from None
    raise error
