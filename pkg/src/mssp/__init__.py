"""Shortest-path machinery on graphs embedded in surfaces.

Subpackages of note:

* :mod:`mssp.surface`  -- embeddings, duality, tree--cotree partitions
* :mod:`mssp.forest`   -- dynamic rooted / unrooted forests
* :mod:`mssp.planar`   -- multiple-source shortest paths, planar engine
* :mod:`mssp.genus`    -- multiple-source shortest paths, positive genus
* :mod:`mssp.cover`    -- orientable double covers
* :mod:`mssp.cycles`   -- shortest non-separating / non-contractible cycles
* :mod:`mssp.oracle`   -- brute-force ground truth used by the test suite
"""

__version__ = "0.1.0"
