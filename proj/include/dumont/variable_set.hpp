#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dumont {

// An ordered set of distinct variable names. The declaration order is fixed
// at construction and defines the exponent-vector layout of every monomial
// over this ring.
class VariableSet {
public:
    explicit VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("variable name must be non-empty");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[i] == names_[j])
                    throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view v) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == v) return i;
        return std::nullopt;
    }

    std::size_t require(std::string_view v) const {
        auto i = index_of(v);
        if (!i) throw std::invalid_argument("unknown variable: " + std::string(v));
        return *i;
    }

    bool operator==(const VariableSet& o) const { return names_ == o.names_; }
    bool operator!=(const VariableSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

using VariableSetPtr = std::shared_ptr<const VariableSet>;

inline VariableSetPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const VariableSet>(std::move(names));
}

inline bool same_ring(const VariableSetPtr& a, const VariableSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace dumont
