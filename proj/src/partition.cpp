#include "coinv/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace coinv::symfunc {

namespace {
void check_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}
}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    check_parts(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_parts(parts_);
}

Partition Partition::row(int m) {
    if (m < 0) throw std::invalid_argument("row shape needs m >= 0");
    return m == 0 ? Partition{} : Partition{m};
}

Partition Partition::column(int m) {
    if (m < 0) throw std::invalid_argument("column shape needs m >= 0");
    return Partition(std::vector<int>(static_cast<std::size_t>(m), 1));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition Partition::transpose() const {
    std::vector<int> t;
    if (!parts_.empty()) {
        t.assign(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
    }
    return Partition(std::move(t));
}

bool Partition::contains(const Partition& nu) const {
    if (nu.length() > length()) return false;
    for (int i = 0; i < nu.length(); ++i)
        if (nu.part(i) > part(i)) return false;
    return true;
}

std::vector<Partition> Partition::subpartitions() const {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (row == length()) {
            std::vector<int> trimmed;
            for (int p : cur)
                if (p > 0) trimmed.push_back(p);
            out.emplace_back(std::move(trimmed));
            return;
        }
        int hi = std::min(cap, part(row));
        for (int p = hi; p >= 0; --p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, parts_.empty() ? 0 : parts_[0]);
    return out;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

}  // namespace coinv::symfunc
