#include "gvcam/tensors.h"

namespace gvcam {
namespace {

constexpr SexticTerm kTerms[] = {
    {1, {0, 0, 5, 6, 11, 11}},
    {-1, {0, 0, 5, 7, 10, 11}},
    {-1, {0, 0, 6, 7, 9, 11}},
    {1, {0, 0, 7, 7, 9, 10}},
    {-1, {0, 1, 4, 6, 11, 11}},
    {1, {0, 1, 4, 7, 10, 11}},
    {-1, {0, 1, 5, 6, 10, 11}},
    {1, {0, 1, 5, 7, 10, 10}},
    {1, {0, 1, 6, 6, 9, 11}},
    {1, {0, 1, 6, 7, 8, 11}},
    {-1, {0, 1, 6, 7, 9, 10}},
    {-1, {0, 1, 7, 7, 8, 10}},
    {-1, {0, 2, 4, 5, 11, 11}},
    {1, {0, 2, 4, 7, 9, 11}},
    {1, {0, 2, 5, 5, 10, 11}},
    {-1, {0, 2, 5, 6, 9, 11}},
    {1, {0, 2, 5, 7, 8, 11}},
    {-1, {0, 2, 5, 7, 9, 10}},
    {1, {0, 2, 6, 7, 9, 9}},
    {-1, {0, 2, 7, 7, 8, 9}},
    {1, {0, 3, 4, 5, 10, 11}},
    {1, {0, 3, 4, 6, 9, 11}},
    {-2, {0, 3, 4, 7, 9, 10}},
    {-1, {0, 3, 5, 5, 10, 10}},
    {-2, {0, 3, 5, 6, 8, 11}},
    {2, {0, 3, 5, 6, 9, 10}},
    {1, {0, 3, 5, 7, 8, 10}},
    {-1, {0, 3, 6, 6, 9, 9}},
    {1, {0, 3, 6, 7, 8, 9}},
    {1, {1, 1, 4, 6, 10, 11}},
    {-1, {1, 1, 4, 7, 10, 10}},
    {-1, {1, 1, 6, 6, 8, 11}},
    {1, {1, 1, 6, 7, 8, 10}},
    {1, {1, 2, 4, 4, 11, 11}},
    {-1, {1, 2, 4, 5, 10, 11}},
    {-1, {1, 2, 4, 6, 9, 11}},
    {1, {1, 2, 7, 7, 8, 8}},
    {2, {1, 2, 4, 7, 9, 10}},
    {2, {1, 2, 5, 6, 8, 11}},
    {-1, {1, 2, 5, 7, 8, 10}},
    {-2, {1, 2, 4, 7, 8, 11}},
    {-1, {1, 2, 6, 7, 8, 9}},
    {-1, {1, 3, 4, 4, 10, 11}},
    {1, {1, 3, 4, 6, 8, 11}},
    {1, {1, 3, 4, 5, 10, 10}},
    {-1, {1, 3, 4, 6, 9, 10}},
    {1, {1, 3, 4, 7, 8, 10}},
    {-1, {1, 3, 5, 6, 8, 10}},
    {1, {1, 3, 6, 6, 8, 9}},
    {-1, {1, 3, 6, 7, 8, 8}},
    {1, {2, 2, 4, 5, 9, 11}},
    {-1, {2, 2, 4, 7, 9, 9}},
    {-1, {2, 2, 5, 5, 8, 11}},
    {1, {2, 2, 5, 7, 8, 9}},
    {-1, {2, 3, 4, 4, 9, 11}},
    {1, {2, 3, 4, 5, 8, 11}},
    {-1, {2, 3, 4, 5, 9, 10}},
    {1, {2, 3, 4, 6, 9, 9}},
    {1, {2, 3, 4, 7, 8, 9}},
    {1, {2, 3, 5, 5, 8, 10}},
    {-1, {2, 3, 5, 6, 8, 9}},
    {-1, {2, 3, 5, 7, 8, 8}},
    {1, {3, 3, 4, 4, 9, 10}},
    {-1, {3, 3, 4, 5, 8, 10}},
    {-1, {3, 3, 4, 6, 8, 9}},
    {1, {3, 3, 5, 6, 8, 8}},
};

}  // namespace

std::span<const SexticTerm> SexticTerms() { return kTerms; }

}  // namespace gvcam
