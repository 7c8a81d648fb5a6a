from typing import List, Sequence, Tuple

import matplotlib as mpl
import matplotlib.pyplot as plt


def array_to_cmap(
    values: Sequence[float], cmap: str, alpha: float = 1.0
) -> Tuple[mpl.cm.ScalarMappable, List[Tuple[float, float, float, float]]]:
    """
    normalise values onto a colour map, e.g. face degrees onto face colours

    :param values: the values to colour
    :param cmap: name of the matplotlib colour map
    :param alpha: opacity given to every colour
    :returns: the mappable and one RGBA tuple per value

    """

    lo = min(values) if len(values) else 0
    hi = max(values) if len(values) else 1

    # a flat family still needs a non-degenerate range
    norm = mpl.colors.Normalize(vmin=lo, vmax=hi if hi > lo else lo + 1)

    mappable = plt.cm.ScalarMappable(norm=norm, cmap=cmap)

    rgba = [tuple(mappable.to_rgba(v, alpha=alpha)) for v in values]

    return mappable, rgba
