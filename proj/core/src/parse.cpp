#include "bcls/fpgroup.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace bcls::fpgroup {

namespace {

struct WordParser {
    const std::string& s;
    size_t i;
    const std::map<std::string, int>& gen_index;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool at_end_token() {
        skip_ws();
        return i >= s.size() || s[i] == ',' || s[i] == ')' || s[i] == ';';
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected integer", i);
        long v = std::stol(s.substr(start, i - start));
        return neg ? -v : v;
    }

    Word parse_factor() {
        skip_ws();
        Word base;
        if (i < s.size() && s[i] == '(') {
            ++i;
            base = parse_product();
            skip_ws();
            if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
            ++i;
        } else {
            size_t start = i;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            if (i == start) throw ParseError("expected generator or '('", i);
            std::string name = s.substr(start, i - start);
            auto it = gen_index.find(name);
            if (it == gen_index.end()) throw ParseError("unknown generator '" + name + "'", start);
            base = make_word({{it->second, 1}});
        }
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            long e = parse_int();
            base = power(base, e);
        }
        return base;
    }

    Word parse_product() {
        Word w = parse_factor();
        for (;;) {
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                w = concat(w, parse_factor());
            } else {
                break;
            }
        }
        return w;
    }
};

std::map<std::string, int> index_of(const Presentation& pres) {
    std::map<std::string, int> m;
    for (int k = 0; k < pres.ngens(); ++k) m[pres.gens[k]] = k;
    return m;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    size_t gpos = text.find("gens:");
    if (gpos == std::string::npos) throw ParseError("expected 'gens:'", 0);
    size_t rpos = text.find("rels:", gpos);
    if (rpos == std::string::npos) throw ParseError("expected 'rels:'", text.size());

    Presentation pres;
    {
        std::string gsec = text.substr(gpos + 5, rpos - gpos - 5);
        // strip the ';' separating the sections
        std::istringstream in(gsec);
        std::string name;
        while (in >> name) {
            if (name == ";") continue;
            if (!name.empty() && name.back() == ';') name.pop_back();
            if (name.empty()) continue;
            for (char ch : name)
                if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                    throw ParseError("bad generator name '" + name + "'", gpos);
            pres.gens.push_back(name);
        }
    }
    if (pres.gens.empty()) throw ParseError("no generators", gpos);

    auto gi = index_of(pres);
    std::string rsec = text.substr(rpos + 5);
    WordParser wp{rsec, 0, gi};
    for (;;) {
        wp.skip_ws();
        if (wp.i >= rsec.size()) break;
        Word w = wp.parse_product();
        Word r = cyclically_reduce(w);
        if (!r.empty()) pres.relators.push_back(std::move(r));
        wp.skip_ws();
        if (wp.i < rsec.size()) {
            if (rsec[wp.i] != ',') throw ParseError("expected ','", wp.i);
            ++wp.i;
        }
    }
    return pres;
}

Word parse_word(const Presentation& pres, const std::string& text) {
    auto gi = index_of(pres);
    WordParser wp{text, 0, gi};
    Word w = wp.parse_product();
    wp.skip_ws();
    if (wp.i != text.size()) throw ParseError("trailing input", wp.i);
    return w;
}

std::string print_word(const Presentation& pres, const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : w.syl) {
        if (!first) os << "*";
        first = false;
        os << pres.gens.at(s.gen);
        if (s.exp != 1) os << "^" << s.exp;
    }
    return os.str();
}

std::string print_presentation(const Presentation& pres) {
    std::ostringstream os;
    os << "gens:";
    for (const auto& g : pres.gens) os << " " << g;
    os << " ; rels: ";
    for (size_t k = 0; k < pres.relators.size(); ++k) {
        if (k) os << ", ";
        os << print_word(pres, pres.relators[k]);
    }
    return os.str();
}

}  // namespace bcls::fpgroup
