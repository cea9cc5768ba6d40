#pragma once

#include <random>
#include <string>

#include "artin/artin.hpp"
#include "artin/io.hpp"
#include "artin/oracle.hpp"

namespace testing_support {

using namespace artin;

inline Element el(const ContextPtr& ctx, const std::string& text) { return io::parse_element(ctx, text); }

inline GeneratorSet gens(std::initializer_list<int> one_based) {
    GeneratorSet X;
    for (int s : one_based) X.insert(s - 1);
    return X;
}

inline Word random_word(std::mt19937& rng, int rank, int length, bool positive = false) {
    std::uniform_int_distribution<int> g(0, rank - 1), sign(0, 1);
    Word w;
    for (int i = 0; i < length; ++i) w.push_back({g(rng), !positive && sign(rng) == 1});
    return w;
}

inline Element random_element(std::mt19937& rng, const ContextPtr& ctx, int max_length, bool positive = false) {
    std::uniform_int_distribution<int> len(0, max_length);
    return from_word(ctx, random_word(rng, ctx->rank(), len(rng), positive));
}

}  // namespace testing_support
