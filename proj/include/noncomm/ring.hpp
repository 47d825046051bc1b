#pragma once

#include <concepts>

namespace noncomm {

// A backend is a pair (Ring, Module): Ring elements act on Module vectors from
// the left, (a * b) * y == a * (b * y). Zero and identity are obtained from a
// prototype so that sized backends (matrices) carry their dimension along.
template <class R>
concept RingElement = std::regular<R> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { zero_like(a) } -> std::convertible_to<R>;
    { identity_like(a) } -> std::convertible_to<R>;
    { compatible(a, b) } -> std::convertible_to<bool>;
};

template <class V, class R>
concept ModuleVector = RingElement<R> && std::regular<V> &&
    requires(const R& a, const V& y, const V& z) {
        { y + z } -> std::convertible_to<V>;
        { a * y } -> std::convertible_to<V>;
        { zero_like(y) } -> std::convertible_to<V>;
        { compatible(a, y) } -> std::convertible_to<bool>;
    };

template <RingElement R>
R compose(const R& a, const R& b) {
    return a * b;
}

template <RingElement R, ModuleVector<R> V>
V apply(const R& op, const V& y) {
    return op * y;
}

}  // namespace noncomm
