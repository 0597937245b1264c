"""numeric helpers: Gaussian functions, divergences and utilities"""
