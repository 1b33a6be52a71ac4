#include "superindex/epsint.hpp"

#include <cctype>

#include "superindex/errors.hpp"

namespace superindex {

std::string EpsInt::str() const {
    if (is_zero()) return "0";
    std::string s;
    if (even != 0 || odd == 0) s = even.str();
    if (odd != 0) {
        if (!s.empty() && odd > 0) s += "+";
        if (odd == 1)
            s += "e";
        else if (odd == -1)
            s += "-e";
        else
            s += odd.str() + "e";
    }
    return s;
}

EpsInt EpsInt::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) fail("ParseError", "empty coefficient");

    auto parse_int = [](const std::string& t) -> Int {
        if (t.empty() || t == "+") return Int(1);
        if (t == "-") return Int(-1);
        for (size_t i = 0; i < t.size(); ++i) {
            char c = t[i];
            bool ok = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && (c == '+' || c == '-'));
            if (!ok) fail("ParseError", "bad integer '" + t + "'");
        }
        return t.front() == '+' ? Int(t.substr(1)) : Int(t);
    };

    size_t epos = s.find('e');
    if (epos == std::string::npos) return EpsInt(parse_int(s));
    if (epos + 1 != s.size()) fail("ParseError", "bad coefficient '" + text + "'");
    std::string body = s.substr(0, epos);
    // split off the eps part: last sign not at position 0
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return EpsInt(Int(0), parse_int(body));
    return EpsInt(parse_int(body.substr(0, split)),
                  parse_int(body.substr(split)));
}

}  // namespace superindex
