#pragma once

#include <map>
#include <utility>

#include "strtop/scalar.hpp"

namespace strtop {

// Sparse formal linear combination. Zero coefficients are never stored.
template <class Key>
class Chain {
public:
    using Map = std::map<Key, Scalar>;
    using const_iterator = typename Map::const_iterator;

    Chain() = default;
    explicit Chain(const Key& k, const Scalar& c = Scalar(1)) { add(k, c); }

    void add(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(Key&& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(const Chain& o, const Scalar& c = Scalar(1)) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }

    Scalar coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    Chain operator*(const Scalar& c) const {
        Chain r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, v * c);
        return r;
    }
    Chain operator+(const Chain& o) const {
        Chain r = *this;
        r.add(o);
        return r;
    }
    Chain operator-(const Chain& o) const {
        Chain r = *this;
        r.add(o, Scalar(-1));
        return r;
    }
    Chain& operator+=(const Chain& o) {
        add(o);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        add(o, Scalar(-1));
        return *this;
    }
    bool operator==(const Chain& o) const { return terms_ == o.terms_; }
    bool operator!=(const Chain& o) const { return !(*this == o); }

    bool empty() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }
    void clear() { terms_.clear(); }

private:
    Map terms_;
};

}  // namespace strtop
