#pragma once

#include <doctest.h>

#include <string>

#include "synco/io.hpp"
#include "synco/random.hpp"

namespace synco::test {

inline std::string corpus(const std::string& file) { return std::string(SYNCO_CORPUS) + "/" + file; }

template <class T>
T load(const std::string& file) {
    return std::get<T>(load_file(corpus(file)));
}

inline GeometricDatum datum(const std::string& name) { return load<GeometricDatum>(name + ".json"); }

inline const Json& frozen() {
    static const Json j = read_json(SYNCO_FROZEN);
    return j;
}

inline CoefficientFrame frame(long p = 5) {
    CoefficientFrame f;
    f.p = p;
    return f;
}

inline std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& t) {
    std::map<int, std::size_t> out;
    for (auto& [n, d] : t)
        if (d) out[n] = d;
    return out;
}

inline std::size_t total_betti(const Complex& c) {
    std::size_t sum = 0;
    for (auto& [n, h] : betti_table(c)) sum += h;
    return sum;
}

inline std::map<int, std::size_t> as_table(const Json& j) {
    std::map<int, std::size_t> out;
    for (auto& [k, v] : j.items()) out[std::stoi(k)] = v.get<std::size_t>();
    return out;
}

}  // namespace synco::test
