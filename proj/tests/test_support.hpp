#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <hurwitz/cubic_form.hpp>
#include <hurwitz/vecset.hpp>

namespace hurwitz::gen {

/// Uniformly random cubic form: each monomial of degree 1..3 kept with probability 1/2.
inline CubicForm random_cubic(int n, std::mt19937_64& rng)
{
    std::vector<std::uint64_t> keep;
    for (auto m : all_cubic_monomials(n))
        if (rng() & 1U) keep.push_back(m);
    return CubicForm::from_masks(n, std::move(keep));
}

/// Random subset of F_2^n of the given size (size <= 2^n).
inline VecSet random_set(int n, std::size_t size, std::mt19937_64& rng)
{
    std::vector<std::uint64_t> all(std::size_t{1} << n);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    VecSet s(n);
    for (std::size_t i = 0; i < size; ++i) s.insert(BitVec(n, all[i]));
    return s;
}

} // namespace hurwitz::gen
