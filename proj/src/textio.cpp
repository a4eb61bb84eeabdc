#include "sublat/textio.hpp"

#include <cctype>
#include <stdexcept>

namespace sublat {

namespace {

bool digits_only(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

PGroupType parse_component(const std::string& segment) {
    auto colon = segment.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("expected 'p:[...]' in '" + segment + "'");
    std::string prime_text = segment.substr(0, colon);
    std::string rest = segment.substr(colon + 1);
    if (!digits_only(prime_text))
        throw std::invalid_argument("bad prime '" + prime_text + "'");
    if (rest.size() < 3 || rest.front() != '[' || rest.back() != ']')
        throw std::invalid_argument("expected '[d1,d2,...]' in '" + segment + "'");

    std::vector<unsigned> parts;
    std::string body = rest.substr(1, rest.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
        auto comma = body.find(',', start);
        std::string item = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
        if (!digits_only(item) || item.size() > 7)
            throw std::invalid_argument("bad partition part '" + item + "'");
        unsigned long value = std::stoul(item);
        if (value == 0 || value > 1000000)
            throw std::invalid_argument("partition part out of range: " + item);
        parts.push_back(static_cast<unsigned>(value));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return PGroupType(Int(prime_text), Partition(std::move(parts)));
}

}  // namespace

AbelianGroupSpec parse_group_spec(const std::string& text) {
    if (text.empty()) return AbelianGroupSpec();
    std::vector<PGroupType> components;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto semi = text.find(';', start);
        std::string segment = text.substr(start, semi == std::string::npos ? std::string::npos
                                                                           : semi - start);
        components.push_back(parse_component(segment));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return AbelianGroupSpec(std::move(components));
}

}  // namespace sublat
