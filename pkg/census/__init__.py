"""
census – exact counting, enumeration, sampling and orbit statistics for
unlabeled trees.

Subpackages:
  trees        tree types, canonical codes, automorphism orbits
  counting     exact r_n / t_n tables and orbit-count distributions
  enumeration  exhaustive rooted / free tree generation
  sampling     uniform rooted / free tree samplers
  patterns     pattern occurrence counting
  asymptotics  numeric recovery of x0, b1, C, D and mu_r
  experiments  Monte Carlo / exhaustive experiment harness
"""

__version__ = "1.0.0"
