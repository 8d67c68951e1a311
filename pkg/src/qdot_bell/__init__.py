"""Bell-state preparation in coupled quantum dots driven by a quantized laser mode."""
__version__ = "0.1.0"
