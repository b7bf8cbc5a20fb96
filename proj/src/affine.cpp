#include "ldp/affine.hpp"

#include <charconv>

namespace ldp {

std::string AffineForm::to_string() const
{
    if (slope == 0)
        return std::to_string(offset);
    std::string s;
    if (slope == -1)
        s = "-";
    else if (slope != 1)
        s = std::to_string(slope);
    s += 'k';
    if (offset > 0)
        s += '+' + std::to_string(offset);
    else if (offset < 0)
        s += std::to_string(offset);
    return s;
}

namespace {

std::optional<Int> parse_int(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    if (s.front() == '+')
        s.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        return std::nullopt;
    return v;
}

}  // namespace

std::optional<AffineForm> AffineForm::parse(std::string_view text)
{
    const auto kpos = text.find('k');
    if (kpos == std::string_view::npos) {
        auto v = parse_int(text);
        if (!v)
            return std::nullopt;
        return AffineForm{0, *v};
    }
    AffineForm f;
    const auto coeff = text.substr(0, kpos);
    if (coeff.empty() || coeff == "+")
        f.slope = 1;
    else if (coeff == "-")
        f.slope = -1;
    else if (auto v = parse_int(coeff))
        f.slope = *v;
    else
        return std::nullopt;
    const auto rest = text.substr(kpos + 1);
    if (rest.empty())
        return f;
    if (rest.front() != '+' && rest.front() != '-')
        return std::nullopt;
    auto v = parse_int(rest);
    if (!v)
        return std::nullopt;
    f.offset = *v;
    return f;
}

}  // namespace ldp
