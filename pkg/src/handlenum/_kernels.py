"""Select the word kernel implementation at import time.

The compiled extension is used when it was built; set ``HANDLENUM_PURE=1``
to force the pure-Python kernels.
"""

import os

from . import _kernel_py

if os.environ.get("HANDLENUM_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel_c as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND = "compiled" if _impl is not _kernel_py else "python"

letter_bit = _kernel_py.letter_bit
free_reduce = _impl.free_reduce
cyclic_bounds = _impl.cyclic_bounds
whitehead_image = _impl.whitehead_image
cyclic_image_length = _impl.cyclic_image_length
total_cyclic_image_length = _impl.total_cyclic_image_length
total_image_length = _impl.total_image_length
least_rotation = _impl.least_rotation
