"""
CLI Progress Observer
Implements IProgressObserver for console output
"""

import sys

from application.interfaces.services import IProgressObserver

try:
    from tqdm import tqdm
    TQDM_AVAILABLE = True
except ImportError:
    TQDM_AVAILABLE = False


class CLIProgressObserver(IProgressObserver):
    """
    CLI Progress Observer (Observer Pattern)

    Shows a tqdm bar over sweep tuples and one line per verification
    suite. Progress goes to stderr so stdout stays machine-readable.
    """

    def __init__(self, use_progress_bar: bool = True):
        """
        Initialize CLI progress observer

        Args:
            use_progress_bar: Whether to use tqdm progress bars (if available)
        """
        self._use_progress_bar = use_progress_bar and TQDM_AVAILABLE
        self._current_bar = None

    def on_sweep_started(self, total_tuples: int) -> None:
        print(f"🔍 Sweeping {total_tuples} candidate tuples...", file=sys.stderr)

        if self._use_progress_bar and total_tuples > 0:
            self._current_bar = tqdm(total=total_tuples, desc="Sweeping", unit="tuple", file=sys.stderr)  # type: ignore

    def on_row_completed(self, label: str, current: int, total: int) -> None:
        if self._current_bar:
            self._current_bar.update(1)
            self._current_bar.set_postfix_str(label[:30])
        elif current % 100 == 0 or current == total:
            print(f"  Processed {current}/{total} tuples...", end='\r', file=sys.stderr)

    def on_sweep_completed(self, rows: int, skipped: int) -> None:
        if self._current_bar:
            self._current_bar.close()
            self._current_bar = None

        print(f"\n✓ Sweep complete: {rows} rows, {skipped} skipped", file=sys.stderr)

    def on_suite_started(self, name: str) -> None:
        print(f"▶ {name} ...", file=sys.stderr)

    def on_suite_completed(self, name: str, passed: int, failed: int, open_items: int) -> None:
        status = "✓" if failed == 0 else "✗"
        print(f"{status} {name}: {passed} passed, {failed} failed, {open_items} open", file=sys.stderr)


class SilentProgressObserver(IProgressObserver):
    """
    Silent Progress Observer

    No-op implementation for when progress output is not desired.
    """

    def on_sweep_started(self, total_tuples: int) -> None:
        pass

    def on_row_completed(self, label: str, current: int, total: int) -> None:
        pass

    def on_sweep_completed(self, rows: int, skipped: int) -> None:
        pass

    def on_suite_started(self, name: str) -> None:
        pass

    def on_suite_completed(self, name: str, passed: int, failed: int, open_items: int) -> None:
        pass
