import pytest

import totsum._kernels_py as kernels_py

try:
    import totsum._kernels as kernels_compiled
except ImportError:
    kernels_compiled = None

KERNEL_BACKENDS = [kernels_py] if kernels_compiled is None else [kernels_compiled, kernels_py]
KERNEL_IDS = ["python"] if kernels_compiled is None else ["compiled", "python"]


@pytest.fixture(params=KERNEL_BACKENDS, ids=KERNEL_IDS)
def kernels(request):
    """Run a test against every available kernel backend."""
    return request.param
