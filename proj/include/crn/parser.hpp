#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "crn/kinetics.hpp"
#include "crn/network.hpp"

namespace crn {

struct ParsedModel {
    ReactionNetwork network;
    std::optional<PowerLawKinetics> kinetics;
};

namespace detail {

struct Line {
    std::size_t number = 0; // 1-based
    std::string text;       // comment stripped
};

inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string line(text.substr(start, end - start));
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        lines.push_back({number, line});
        ++number;
        if (end == text.size())
            break;
        start = end + 1;
    }
    return lines;
}

inline bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

inline bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

/// Cursor over one line, tracking the column for diagnostics.
struct Cursor {
    const std::string& text;
    std::size_t line;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, pos + 1, msg);
    }

    std::string identifier() {
        skip_ws();
        if (pos >= text.size() || !ident_start(text[pos]))
            fail("identifier expected");
        std::size_t start = pos;
        while (pos < text.size() && ident_char(text[pos]))
            ++pos;
        return text.substr(start, pos - start);
    }

    std::optional<Rational> number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == '/'))
            ++pos;
        if (pos == start)
            return std::nullopt;
        try {
            return parse_rational(std::string_view(text).substr(start, pos - start));
        } catch (const Error& e) {
            pos = start;
            fail(e.what());
        }
    }

    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

inline Complex parse_complex(Cursor& cur) {
    cur.skip_ws();
    // The zero complex is a lone "0".
    {
        std::size_t save = cur.pos;
        if (cur.peek() == '0') {
            ++cur.pos;
            cur.skip_ws();
            if (cur.pos >= cur.text.size() || cur.text[cur.pos] == '-' ||
                cur.text[cur.pos] == '<')
                return Complex::zero();
            cur.pos = save;
        }
    }
    Complex c;
    while (true) {
        std::optional<Rational> coeff = cur.number();
        cur.skip_ws();
        std::string name = cur.identifier();
        const Rational value = coeff.value_or(Rational(1));
        if (value <= 0)
            cur.fail("complex coefficients must be positive");
        c.add(name, value);
        if (!cur.consume('+'))
            break;
    }
    return c;
}

struct ReactionLine {
    std::string forward_id; // empty = auto
    std::string reverse_id; // empty unless "ida|idb:" given
    Complex reactant;
    Complex product;
    bool reversible = false;
    std::size_t line = 0;
};

inline PowerLawKinetics parse_kinetics_lines(const std::vector<Line>& lines,
                                             const ReactionNetwork& net) {
    bool saw_anything = false;
    bool mass_action = false;
    std::map<std::string, std::map<std::string, Rational>> orders;
    std::map<std::string, Rational> rates;
    std::set<std::string> explicit_rows;

    for (const Line& line : lines) {
        if (is_blank(line.text))
            continue;
        Cursor cur{line.text, line.number};
        cur.skip_ws();
        saw_anything = true;

        std::string head = cur.identifier();
        if (head == "mass" && cur.consume('-')) {
            if (cur.identifier() != "action" || !cur.done())
                cur.fail("did you mean 'mass-action'?");
            mass_action = true;
            continue;
        }
        if (!cur.consume(':'))
            cur.fail("':' expected after reaction id");
        if (!net.has_reaction(head))
            cur.fail("unknown reaction '" + head + "'");
        if (!explicit_rows.insert(head).second)
            cur.fail("duplicate kinetics line for '" + head + "'");
        auto& row = orders[head];
        row.clear(); // explicit line overrides a mass-action default
        if (!cur.done()) {
            while (true) {
                std::string name = cur.identifier();
                if (!cur.consume('='))
                    cur.fail("'=' expected");
                cur.skip_ws();
                bool negative = cur.consume('-');
                std::optional<Rational> value = cur.number();
                if (!value)
                    cur.fail("number expected");
                Rational v = negative ? Rational(-*value) : *value;
                if (name == "rate") {
                    if (rates.count(head))
                        cur.fail("duplicate rate for '" + head + "'");
                    if (v <= 0)
                        cur.fail("rate constants must be positive");
                    rates[head] = v;
                } else {
                    net.species_index(name); // validates
                    if (!row.emplace(name, v).second)
                        cur.fail("duplicate assignment for species '" + name + "'");
                }
                if (!cur.consume(','))
                    break;
            }
            if (!cur.done())
                cur.fail("unexpected trailing text");
        }
    }

    if (!saw_anything)
        throw Error("empty kinetics block");

    if (mass_action) {
        for (const Reaction& r : net.reactions()) {
            if (explicit_rows.count(r.id))
                continue;
            auto& row = orders[r.id];
            for (const auto& [species, coeff] : r.reactant.terms())
                row[species] = coeff;
        }
    }
    return make_kinetics(net, orders, rates);
}

} // namespace detail

/// Parses the line-oriented network DSL, together with the optional
/// `kinetics:` block. Reversible arrows expand into two reactions with ids
/// "<id>f"/"<id>r" unless a pair "ida|idb:" is written; unnamed reactions are
/// auto-numbered R1, R2, ... in file order.
inline ParsedModel parse_model(std::string_view text) {
    const std::vector<detail::Line> lines = detail::split_lines(text);

    std::vector<std::string> species_order;
    std::vector<detail::ReactionLine> parsed;
    std::vector<detail::Line> kinetics_lines;
    bool in_kinetics = false;

    for (const detail::Line& line : lines) {
        if (detail::is_blank(line.text))
            continue;
        if (in_kinetics) {
            kinetics_lines.push_back(line);
            continue;
        }
        detail::Cursor cur{line.text, line.number};
        cur.skip_ws();

        // Header lines.
        {
            std::size_t save = cur.pos;
            if (detail::ident_start(cur.peek())) {
                std::string head = cur.identifier();
                if (head == "species" && cur.consume(':')) {
                    while (!cur.done())
                        species_order.push_back(cur.identifier());
                    continue;
                }
                if (head == "kinetics" && cur.consume(':')) {
                    if (!cur.done())
                        cur.fail("nothing may follow 'kinetics:'");
                    in_kinetics = true;
                    continue;
                }
                cur.pos = save;
            }
        }

        detail::ReactionLine rl;
        rl.line = line.number;

        // Optional id spec "R1:" or "R2a|R2b:".
        if (const std::size_t colon = line.text.find(':'); colon != std::string::npos) {
            detail::Cursor idcur{line.text, line.number};
            rl.forward_id = idcur.identifier();
            if (idcur.consume('|'))
                rl.reverse_id = idcur.identifier();
            if (!idcur.consume(':'))
                idcur.fail("':' expected after reaction id");
            cur.pos = idcur.pos;
        }

        rl.reactant = detail::parse_complex(cur);
        cur.skip_ws();
        if (cur.peek() == '<') {
            ++cur.pos;
            rl.reversible = true;
        }
        if (!(cur.consume('-') && cur.consume('>')))
            cur.fail("'->' or '<->' expected");
        rl.product = detail::parse_complex(cur);
        if (!cur.done())
            cur.fail("unexpected trailing text");
        if (!rl.reversible && !rl.reverse_id.empty())
            cur.fail("two ids given for an irreversible reaction");
        if (rl.reactant == rl.product)
            throw ParseError(line.number, 1, "self-loop: reactant equals product");
        parsed.push_back(std::move(rl));
    }

    std::vector<Reaction> reactions;
    std::set<std::string> ids;
    std::set<std::pair<Complex, Complex>> pairs;
    std::size_t auto_counter = 0;

    const auto add = [&](std::string id, const Complex& from, const Complex& to,
                         std::size_t line) {
        if (!ids.insert(id).second)
            throw ParseError(line, 1, "duplicate reaction id '" + id + "'");
        if (!pairs.emplace(from, to).second)
            throw ParseError(line, 1, "duplicate reaction");
        reactions.push_back({std::move(id), from, to, std::nullopt});
    };

    for (detail::ReactionLine& rl : parsed) {
        std::string base = rl.forward_id;
        if (base.empty())
            base = "R" + std::to_string(++auto_counter);
        if (rl.reversible) {
            std::string fwd = rl.reverse_id.empty() ? base + "f" : base;
            std::string rev = rl.reverse_id.empty() ? base + "r" : rl.reverse_id;
            add(fwd, rl.reactant, rl.product, rl.line);
            add(rev, rl.product, rl.reactant, rl.line);
        } else {
            add(base, rl.reactant, rl.product, rl.line);
        }
    }

    if (reactions.empty())
        throw Error("no reactions found");

    ParsedModel model{ReactionNetwork::from_reactions(std::move(reactions), species_order), {}};
    if (in_kinetics)
        model.kinetics = detail::parse_kinetics_lines(kinetics_lines, model.network);
    return model;
}

inline ReactionNetwork parse_network(std::string_view text) {
    return parse_model(text).network;
}

/// Parses a standalone kinetics block against an existing network.
inline PowerLawKinetics parse_kinetics(std::string_view text, const ReactionNetwork& net) {
    return detail::parse_kinetics_lines(detail::split_lines(text), net);
}

/// "2M1 + M3"; terms follow the given species order.
inline std::string render_complex(const Complex& c,
                                  const std::vector<std::string>& species_order) {
    if (c.is_zero())
        return "0";
    std::vector<std::pair<std::string, Rational>> terms;
    for (const std::string& name : species_order)
        if (!c.coefficient(name).is_zero())
            terms.emplace_back(name, c.coefficient(name));
    for (const auto& [name, coeff] : c.terms())
        if (std::find(species_order.begin(), species_order.end(), name) == species_order.end())
            terms.emplace_back(name, coeff);
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            out += " + ";
        if (terms[i].second != 1)
            out += to_string(terms[i].second);
        out += terms[i].first;
    }
    return out;
}

/// Writes the network back out as DSL text. Adjacent reversible pairs are
/// collapsed to one "<->" line; non-adjacent pairs are written as two plain
/// lines and re-paired structurally on parse.
inline std::string render_network(const ReactionNetwork& net) {
    std::ostringstream os;
    os << "species:";
    for (const std::string& s : net.species())
        os << ' ' << s;
    os << '\n';
    const auto& reactions = net.reactions();
    for (std::size_t i = 0; i < reactions.size(); ++i) {
        const Reaction& r = reactions[i];
        const auto partner = net.reverse_index(i);
        if (partner && *partner + 1 == i)
            continue; // rendered with its forward direction
        if (partner && *partner == i + 1) {
            os << r.id << '|' << reactions[*partner].id << ": "
               << render_complex(r.reactant, net.species()) << " <-> "
               << render_complex(r.product, net.species()) << '\n';
        } else {
            os << r.id << ": " << render_complex(r.reactant, net.species()) << " -> "
               << render_complex(r.product, net.species()) << '\n';
        }
    }
    return os.str();
}

inline std::string render_model(const ReactionNetwork& net,
                                const std::optional<PowerLawKinetics>& kinetics) {
    std::string out = render_network(net);
    if (!kinetics)
        return out;
    out += "kinetics:\n";
    std::size_t emitted = 0;
    for (std::size_t i = 0; i < net.reactions().size(); ++i) {
        const std::string& id = net.reactions()[i].id;
        std::vector<std::string> parts;
        for (std::size_t j = 0; j < net.species().size(); ++j) {
            const Rational& v = kinetics->order_matrix.at(i, j);
            if (!v.is_zero())
                parts.push_back(net.species()[j] + "=" + to_string(v));
        }
        const Rational rate = kinetics->rates.count(id) ? kinetics->rates.at(id) : Rational(1);
        if (rate != 1)
            parts.push_back("rate=" + to_string(rate));
        if (parts.empty())
            continue;
        out += id + ": ";
        for (std::size_t p = 0; p < parts.size(); ++p)
            out += (p ? ", " : "") + parts[p];
        out += '\n';
        ++emitted;
    }
    if (emitted == 0)
        out += net.reactions().front().id + ":\n";
    return out;
}

} // namespace crn
