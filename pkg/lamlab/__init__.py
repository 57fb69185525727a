"""Laboratory for numeral systems and storage operators in the pure and typed λ-calculus."""

__version__ = "0.1.0"
