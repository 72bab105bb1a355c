from monofock.poly.intpoly import IntPoly
from monofock.poly.series import SeriesTruncation
from monofock.poly.sturm import RootInterval, isolate_real_roots, refine_root

# mgf depends on monofock.measures; import it as monofock.poly.mgf

__all__ = ["IntPoly", "SeriesTruncation", "RootInterval", "isolate_real_roots", "refine_root"]
