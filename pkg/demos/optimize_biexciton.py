"""Numerical search for the second pulse that prepares the biexciton.

Scans detuning and area on a coarse grid and refines the best cell with
Nelder-Mead.  Takes a few seconds.
"""
from twocolor import OptimizationProblem, optimize, scenario

problem = OptimizationProblem(scenario("fig6"), "xx", (-13.0, -10.0), (10.0, 30.0),
                              grid_points=(13, 13), refine_iterations=100)
result = optimize(problem)
print(f"Delta_2 = {result.best_detuning:.3f} meV, area = {result.best_area:.2f} pi, "
      f"occ_xx = {result.objective:.4f} ({result.evaluations} propagations)")
