import math

import numpy as np
import pytest

from sfcar import _specsum_py, kernels

try:
    from sfcar import _specsum
except ImportError:
    _specsum = None


def random_grid(rng, n):
    nodes = rng.uniform(0.0, math.pi, size=n)
    weights = rng.uniform(0.0, 0.1, size=n)
    return np.cos(nodes), weights


@pytest.mark.skipif(_specsum is None, reason="compiled kernel not built")
class TestBackendAgreement:
    @pytest.mark.parametrize("zeta,snr", [(0.0, 1.0), (0.2, 10.0), (0.2499, 1e-4)])
    def test_backends_match(self, zeta, snr):
        rng = np.random.default_rng(42)
        cos1, w1 = random_grid(rng, 257)
        cos2, w2 = random_grid(rng, 129)
        cnorm = 1.0 if zeta == 0.0 else 1.3
        compiled = _specsum.rate_sums(cos1, w1, cos2, w2, zeta, snr, cnorm)
        fallback = _specsum_py.rate_sums(cos1, w1, cos2, w2, zeta, snr, cnorm)
        for a, b in zip(compiled, fallback):
            assert a == pytest.approx(b, rel=5e-13)

    def test_blocked_fallback_matches_on_large_grid(self):
        # exceeds the fallback's block size, exercising the chunked path
        n = 3000
        omega = 2.0 * np.pi * np.arange(n) / n
        w = np.full(n, 1.0 / n)
        c = np.cos(omega)
        compiled = _specsum.rate_sums(c, w, c, w, 0.15, 2.0, 1.1)
        fallback = _specsum_py.rate_sums(c, w, c, w, 0.15, 2.0, 1.1)
        for a, b in zip(compiled, fallback):
            assert a == pytest.approx(b, rel=5e-13)


class TestDispatch:
    def test_backend_reported(self):
        assert kernels.backend_name() in ("compiled", "python")

    def test_dispatch_callable(self):
        c = np.cos(np.linspace(0.1, 3.0, 16))
        w = np.full(16, 0.05)
        kli, mi = kernels.rate_sums(c, w, c, w, 0.1, 1.0, 1.05)
        assert 0.0 < kli < mi

    def test_deterministic(self):
        c = np.cos(np.linspace(0.0, math.pi, 64))
        w = np.full(64, 1.0 / 64.0)
        a = kernels.rate_sums(c, w, c, w, 0.22, 5.0, 1.4)
        b = kernels.rate_sums(c, w, c, w, 0.22, 5.0, 1.4)
        assert a == b

    def test_zero_snr_sums(self):
        c = np.cos(np.linspace(0.0, math.pi, 8))
        w = np.full(8, 0.125)
        assert kernels.rate_sums(c, w, c, w, 0.2, 0.0, 1.3) == (0.0, 0.0)
