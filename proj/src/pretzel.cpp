#include "pretzelccs/pretzel.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pretzel {

PretzelKnot::PretzelKnot(std::vector<long> twists) : twists_(std::move(twists)) {
    if (twists_.empty() || twists_.size() % 2 == 0)
        throw BadLength("twist vector must have odd length >= 1, got " +
                        std::to_string(twists_.size()));
    for (long k : twists_)
        if (k < 0) throw NegativeTwist("twist parameters must be nonnegative, got " +
                                       std::to_string(k));
}

bool PretzelKnot::all_twists_zero() const {
    return std::all_of(twists_.begin(), twists_.end(), [](long k) { return k == 0; });
}

Int PretzelKnot::twist_sum() const {
    Int s = 0;
    for (long k : twists_) s += k;
    return s;
}

PretzelKnot PretzelKnot::canonical() const {
    std::vector<long> t = twists_;
    std::sort(t.begin(), t.end(), std::greater<long>());
    return PretzelKnot(std::move(t));
}

std::string PretzelKnot::to_string() const {
    std::ostringstream os;
    os << "K(";
    for (std::size_t i = 0; i < twists_.size(); ++i) {
        if (i) os << ",";
        os << twists_[i];
    }
    os << ")";
    return os.str();
}

bool PretzelKnot::operator<(const PretzelKnot& o) const {
    if (twists_.size() != o.twists_.size()) return twists_.size() < o.twists_.size();
    return twists_ < o.twists_;
}

PretzelKnot parse_knot(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 4 || (s[0] != 'K' && s[0] != 'k') || s[1] != '(' || s.back() != ')')
        throw ParseError("expected \"K(k1,k2,...)\", got \"" + text + "\"");
    std::string body = s.substr(2, s.size() - 3);
    std::vector<long> twists;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (item.empty()) throw ParseError("empty twist entry in \"" + text + "\"");
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(item, &used);
        } catch (const std::exception&) {
            throw ParseError("bad twist entry \"" + item + "\" in \"" + text + "\"");
        }
        if (used != item.size())
            throw ParseError("bad twist entry \"" + item + "\" in \"" + text + "\"");
        twists.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return PretzelKnot(std::move(twists));
}

SeifertMatrix seifert_matrix(const PretzelKnot& k) {
    const unsigned g = k.genus();
    if (g == 0)
        throw UnknotHasNoSurfaceBasis("the unknot has no genus-g surface basis; "
                                      "invariant operations special-case it");
    const auto& t = k.twists();
    SeifertMatrix m;
    m.dim = 2 * g;
    m.entries.assign(m.dim * m.dim, Int(0));
    for (std::size_t i = 0; i < m.dim; ++i) {
        m.at(i, i) = Int(t[i]) + Int(t[i + 1]) + 1;
        if (i + 1 < m.dim) {
            m.at(i, i + 1) = Int(t[i + 1]);
            m.at(i + 1, i) = Int(t[i + 1]) + 1;
        }
    }
    return m;
}

Int crossing_number(const PretzelKnot& k) {
    if (k.is_unknot()) return 0;
    return 2 * k.twist_sum() + 2 * k.genus() + 1;
}

std::vector<Int> elementary_symmetric_all(const std::vector<long>& ks) {
    std::vector<Int> s(ks.size() + 1, Int(0));
    s[0] = 1;
    for (std::size_t m = 0; m < ks.size(); ++m)
        for (std::size_t n = std::min(m + 1, ks.size()); n >= 1; --n)
            s[n] += Int(ks[m]) * s[n - 1];
    return s;
}

Int elementary_symmetric(unsigned n, const std::vector<long>& ks) {
    if (n > ks.size()) return 0;
    return elementary_symmetric_all(ks)[n];
}

}  // namespace pretzel
