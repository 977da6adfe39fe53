import pytest

from tamari.noncrossing import NoncrossingTree
from tamari.trees import BinaryTree


@pytest.fixture
def inorder_figure_tree():
    # root 5; left child 1 with right child 3 having children 2 and 4;
    # right child 8 with left child 6 having right child 7
    left = BinaryTree(None, BinaryTree(BinaryTree(), BinaryTree()))
    right = BinaryTree(BinaryTree(None, BinaryTree()), None)
    return BinaryTree(left, right)


@pytest.fixture
def twelve_gon_tree():
    # the 11-edge noncrossing tree in the based 12-gon whose poset has
    # maximal elements 1 and 11
    edges = {
        (0, 10), (1, 2), (2, 3), (2, 10), (3, 4), (3, 5), (3, 6),
        (6, 7), (6, 9), (8, 9), (10, 11),
    }
    return NoncrossingTree(11, frozenset(edges))
