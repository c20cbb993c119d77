"""Print the block-shift shape of a tower and its bookkeeping.

    python scripts/render_tower.py 5,3,4
"""

import sys
import warnings

from polyadica.tower import ChainWarning, TowerSpec, build_shape, final_arity, render_shape, tower_dimension, validate_arity_chain


def main(text="5,3,4"):
    spec = TowerSpec.parse(text)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", ChainWarning)
        kappa = validate_arity_chain(spec)
    shape = build_shape(spec)
    fa = final_arity(spec)
    print(f"stages {spec.stages}  size {shape.size}  dimension {tower_dimension(spec)}  kappa {kappa}")
    print(f"outer arity {fa.outer}  flat arity {fa.flat}  {fa.note}")
    for w in caught:
        print(f"warning: {w.message}")
    print(render_shape(shape))


if __name__ == "__main__":
    main(*sys.argv[1:2])
