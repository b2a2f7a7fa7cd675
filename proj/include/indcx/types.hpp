#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace indcx {

using BigInt = boost::multiprecision::cpp_int;

// A face (independent set / simplex) over at most 64 dense vertex ids.
using Face = std::uint64_t;

inline int face_size(Face f) { return std::popcount(f); }
inline bool has(Face f, int v) { return (f >> v) & 1u; }
inline Face bit(int v) { return Face{1} << v; }

template <class F>
inline void for_each_bit(Face f, F&& fn) {
    while (f) {
        int v = std::countr_zero(f);
        fn(v);
        f &= f - 1;
    }
}

inline std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    for_each_bit(f, [&](int v) { out.push_back(v); });
    return out;
}

inline Face face_from(const std::vector<int>& vs) {
    Face f = 0;
    for (int v : vs) {
        if (v < 0 || v >= 64) throw std::out_of_range("vertex id outside the 64-bit face range");
        f |= bit(v);
    }
    return f;
}

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace indcx
