from itertools import chain

from src.ring.index import Family, IndexTuple
from src.utils.exceptions import DomainError

'''
Every index tuple of bounded weight and depth, in a fixed order, for verification sweeps
'''


def compositions(total, parts):
    """
    All ordered tuples of `parts` positive integers summing to `total`, in lexicographic order.
    """

    if parts == 1:
        yield (total,)
        return

    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


class IndexTupleDataset(object):

    def __init__(self, max_weight, max_depth, family=Family.FULL):

        if max_weight < 2 or max_depth < 1:
            raise DomainError("a sweep needs max_weight >= 2 and max_depth >= 1")

        if max_weight % 2:
            max_weight -= 1

        self.family = family

        self.samples = []

        for depth in range(1, max_depth + 1):

            # Weight 2 * total, every half p_j >= 1
            self.samples.extend(chain.from_iterable(
                compositions(total, depth) for total in range(depth, max_weight // 2 + 1)))

    def __len__(self):

        return len(self.samples)

    def __getitem__(self, idx):

        return IndexTuple(self.samples[idx], self.family)
