from pathlib import Path

import pytest

import clipgen
from hlsextract import ColorBlobEngine

DATA_DIR = Path(__file__).resolve().parent / "data"


def _clip(name: str, **kwargs) -> Path:
    # Clips are bundled with the repository; clip generation is
    # deterministic, so a missing file is rebuilt in place.
    path = DATA_DIR / name
    if not path.exists():
        DATA_DIR.mkdir(exist_ok=True)
        clipgen.write_clip(path, **kwargs)
    return path


@pytest.fixture(scope="session")
def well_lit_clip() -> Path:
    return _clip("handclip.mp4")


@pytest.fixture(scope="session")
def over_bright_clip() -> Path:
    return _clip("overbright.mp4", overbright=True)


@pytest.fixture(scope="session")
def no_hand_clip() -> Path:
    return _clip("nohand.mp4", n_frames=30, hand=False, decoys=False)


@pytest.fixture
def engine() -> ColorBlobEngine:
    return ColorBlobEngine()


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose each phase's outcome on the item so teardown fixtures can
    # report pass/fail (used by the acceptance suite's per-criterion lines)
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
