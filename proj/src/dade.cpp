/*
   Copyright 2026 the wblock authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "wb/dade.hpp"

#include <sstream>

#include <json.hpp>

#include "wb/numth.hpp"

namespace wb {

CyclicPGroupShape::CyclicPGroupShape(std::uint64_t p_, unsigned l_)
    : p(p_), l(l_) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw Error(ErrorKind::OutOfRange,
                    "shape prime must be an odd prime, got " +
                        std::to_string(p));
    if (l < 1 || l > 64)
        throw Error(ErrorKind::OutOfRange,
                    "shape length must lie in [1, 64], got " +
                        std::to_string(l));
}

DadeLabel::DadeLabel(CyclicPGroupShape shape, std::uint64_t bits)
    : shape_(shape), bits_(bits) {
    const std::uint64_t mask =
        shape_.l == 64 ? ~0ull : (1ull << shape_.l) - 1;
    if ((bits_ & ~mask) != 0)
        throw Error(ErrorKind::OutOfRange,
                    "label contains indices at or beyond l = " +
                        std::to_string(shape_.l));
}

std::vector<unsigned> DadeLabel::indices() const {
    std::vector<unsigned> out;
    for (unsigned j = 0; j < shape_.l; ++j)
        if (contains(j))
            out.push_back(j);
    return out;
}

SignVector::SignVector(std::vector<int> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() > 64)
        throw Error(ErrorKind::OutOfRange,
                    "sign vector length must lie in [1, 64]");
    for (int e : entries_)
        if (e != 1 && e != -1)
            throw Error(ErrorKind::OutOfRange,
                        "sign vector entries must be +1 or -1");
}

int SignVector::at(unsigned i) const {
    if (i < 1 || i > entries_.size())
        throw Error(ErrorKind::OutOfRange,
                    "sign vector index " + std::to_string(i) +
                        " outside 1.." + std::to_string(entries_.size()));
    return entries_[i - 1];
}

SignVector omega_lambda(const DadeLabel& label) {
    std::vector<int> out(label.length());
    unsigned parity = 0;
    for (unsigned i = 1; i <= label.length(); ++i) {
        parity ^= label.contains(i - 1) ? 1u : 0u;
        out[i - 1] = parity ? -1 : 1;
    }
    return SignVector(std::move(out));
}

DadeLabel invert_omega(const SignVector& v, std::uint64_t p) {
    // Prefix parities are read off the signs; differencing recovers
    // the indicator bits.
    std::uint64_t bits = 0;
    unsigned prev = 0;
    for (unsigned i = 1; i <= v.length(); ++i) {
        unsigned cur = v.at(i) == -1 ? 1u : 0u;
        if (cur != prev)
            bits |= 1ull << (i - 1);
        prev = cur;
    }
    return DadeLabel(CyclicPGroupShape(p, v.length()), bits);
}

DadeLabel interval_label(unsigned a, unsigned b, unsigned l,
                         std::uint64_t p) {
    CyclicPGroupShape shape(p, l);
    if (a > b)
        return DadeLabel(shape, 0);
    if (b >= l)
        throw Error(ErrorKind::OutOfRange,
                    "interval [" + std::to_string(a) + ", " +
                        std::to_string(b) + "] exceeds l = " +
                        std::to_string(l));
    std::uint64_t bits = 0;
    for (unsigned j = a; j <= b; ++j)
        bits |= 1ull << j;
    return DadeLabel(shape, bits);
}

int omega_of_interval_closed_form(unsigned a, unsigned b, unsigned l,
                                  unsigned i) {
    if (a > b)
        throw Error(ErrorKind::OutOfRange,
                    "closed form requires a non-empty interval");
    if (b >= l)
        throw Error(ErrorKind::OutOfRange,
                    "interval [" + std::to_string(a) + ", " +
                        std::to_string(b) + "] exceeds l = " +
                        std::to_string(l));
    if (i < 1 || i > l)
        throw Error(ErrorKind::OutOfRange,
                    "entry index " + std::to_string(i) + " outside 1.." +
                        std::to_string(l));
    if (i <= a)
        return 1;
    if (i <= b)
        return (i - a) % 2 == 0 ? 1 : -1;
    return (b - a + 1) % 2 == 0 ? 1 : -1;
}

DadeLabel add_labels(const DadeLabel& x, const DadeLabel& y) {
    if (!(x.shape() == y.shape()))
        throw Error(ErrorKind::IncompatibleShapes,
                    "labels live over different cyclic group shapes");
    return DadeLabel(x.shape(), x.bits() ^ y.bits());
}

DadeLabel omega_operator(const DadeLabel& x) {
    return DadeLabel(x.shape(), x.bits() ^ 1ull);
}

DadeLabel deflate_label(const DadeLabel& x, unsigned a) {
    const unsigned l = x.length();
    if (a < 1 || a >= l)
        throw Error(ErrorKind::OutOfRange,
                    "central exponent a must satisfy 1 <= a < l");
    const std::uint64_t below = (1ull << a) - 1;
    if ((x.bits() & below) != 0)
        throw Error(ErrorKind::InvalidDomination,
                    "label meets {0..a-1}; the block cannot dominate "
                    "through a central subgroup of exponent " +
                        std::to_string(a));
    // Index a is dropped; everything above shifts down by a.
    std::uint64_t bits = (x.bits() >> a) & ~1ull;
    return DadeLabel(CyclicPGroupShape(x.shape().p, l - a), bits);
}

DadeLabel inflate_label(const DadeLabel& xbar, unsigned a,
                        int bottom_flag) {
    if (bottom_flag != 0 && bottom_flag != 1)
        throw Error(ErrorKind::OutOfRange, "bottom_flag must be 0 or 1");
    if (a < 1)
        throw Error(ErrorKind::OutOfRange,
                    "central exponent a must be >= 1");
    const unsigned l = xbar.length() + a;
    if (l > 64)
        throw Error(ErrorKind::OutOfRange,
                    "inflated length exceeds 64");
    std::uint64_t bits = (xbar.bits() & ~1ull) << a;
    const unsigned alpha0 = xbar.contains(0) ? 1u : 0u;
    if ((alpha0 ^ static_cast<unsigned>(bottom_flag)) == 1u)
        bits |= 1ull << a;
    return DadeLabel(CyclicPGroupShape(xbar.shape().p, l), bits);
}

std::string render_label(const DadeLabel& x) {
    if (x.empty())
        return "k";
    std::ostringstream os;
    bool first = true;
    for (unsigned j : x.indices()) {
        if (!first)
            os << " ∘ ";
        first = false;
        os << "Ω_{D/D_" << j << "}";
    }
    os << "(k)";
    return os.str();
}

std::string label_to_json_string(const DadeLabel& x) {
    nlohmann::json j;
    j["p"] = x.shape().p;
    j["l"] = x.shape().l;
    j["A"] = x.indices();
    return j.dump();
}

DadeLabel label_from_json_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::OutOfRange,
                    std::string("label JSON malformed: ") + e.what());
    }
    if (!j.contains("p") || !j.contains("l") || !j.contains("A") ||
        !j["A"].is_array())
        throw Error(ErrorKind::OutOfRange,
                    "label JSON needs fields p, l and array A");
    CyclicPGroupShape shape(j["p"].get<std::uint64_t>(),
                            j["l"].get<unsigned>());
    std::uint64_t bits = 0;
    for (const auto& idx : j["A"]) {
        unsigned v = idx.get<unsigned>();
        if (v >= shape.l)
            throw Error(ErrorKind::OutOfRange,
                        "label JSON index " + std::to_string(v) +
                            " at or beyond l");
        bits |= 1ull << v;
    }
    return DadeLabel(shape, bits);
}

}  // namespace wb
