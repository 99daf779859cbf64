import numpy as np
import pytest

from matsemi import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # trigger jit compilation once so timed sections measure the algorithms
    signs = np.zeros((1, 2, 2), dtype=np.int8)
    pattern = np.zeros((2, 2), dtype=bool)
    order = np.array([1, 2], dtype=np.int64)
    a = np.eye(2)
    for name in _kernels.available_backends():
        fns = _kernels.backend_functions(name)
        fns["sign_search"](signs)
        fns["subset_search"](pattern, order)
        fns["power_iteration"](a, 1e-9, 100)
