import pytest

from mindist import BitWord, LinearCode, build_dcc, build_qdc, build_qr
from mindist.gf2 import BitMatrix


def pytest_addoption(parser):
    parser.addoption(
        "--run-extended",
        action="store_true",
        default=False,
        help="run extended (long) sweeps such as the k > 27 table rows",
    )


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "extended: long-running sweeps, enabled with --run-extended"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-extended"):
        return
    skip = pytest.mark.skip(reason="extended test; use --run-extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def naive_min_distance(code: LinearCode) -> tuple[int, BitWord]:
    """Independent reference sweep: re-encode every information word from
    scratch, visiting the same reflected Gray order as the oracle."""
    best_w = code.n + 1
    best_info = 0
    for t in range(1, 1 << code.k):
        info = t ^ (t >> 1)
        cw = 0
        for i in range(code.k):
            if (info >> i) & 1:
                cw ^= code.generator.rows[i]
        w = cw.bit_count()
        if w < best_w:
            best_w = w
            best_info = info
    return best_w, code.encode(BitWord(code.k, best_info))


@pytest.fixture(scope="session")
def c20() -> LinearCode:
    """Table 9 C(20,10), exact distance 6."""
    return build_dcc(BitWord.parse("1001111110"))


@pytest.fixture(scope="session")
def golay24() -> LinearCode:
    """QDC(24,12): extended-Golay parameters, exact distance 8."""
    return build_qdc(11)


@pytest.fixture(scope="session")
def hamming7() -> LinearCode:
    """QR(7): (7,4) Hamming-parameter code, exact distance 3."""
    return build_qr(7)


@pytest.fixture(scope="session")
def repetition3() -> LinearCode:
    return LinearCode(3, 1, BitMatrix.from_strings(["111"]))


@pytest.fixture(scope="session")
def repetition7() -> LinearCode:
    return LinearCode(7, 1, BitMatrix.from_strings(["1111111"]))


@pytest.fixture(scope="session")
def padded_identity8() -> LinearCode:
    """[I_8 | 0]: fitness equals gene weight, distance 1."""
    rows = tuple(1 << i for i in range(8))
    return LinearCode(9, 8, BitMatrix(9, rows))
