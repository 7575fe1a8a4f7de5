import numpy as np

from sirminer.services.series import TimeSeriesPair

def pair_from_products(products):
    """Pair whose AP point values are exactly `products`"""
    products = np.asarray(products, dtype=float)
    return TimeSeriesPair(np.ones(len(products)), products)

def true_indices(flags):
    return {t for t, flag in enumerate(flags) if flag}
