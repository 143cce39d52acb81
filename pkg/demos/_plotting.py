"""Optional matplotlib helper shared by the demo scripts."""
import sys


def pyplot():
    """Return matplotlib.pyplot when ``--plot`` was passed and matplotlib is installed."""
    if "--plot" not in sys.argv:
        return None
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipping plots")
        return None
    return plt
