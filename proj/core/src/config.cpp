// Copyright 2026 layerheat authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "layerheat/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "layerheat/fields.hpp"
#include "layerheat/media.hpp"
#include "layerheat/transforms.hpp"

namespace layerheat {
namespace {

constexpr std::size_t kMaxErrors = 20;
constexpr int kMaxDepth = 32;

// Parsed document node: a number, string, boolean, array, or table.
struct Value {
    enum class Kind { number, text, flag, array, table };
    Kind kind = Kind::number;
    double num = 0.0;
    bool flag_value = false;
    std::string text;
    std::vector<Value> items;
    std::vector<std::pair<std::string, Value>> entries;
    int line = 0;

    const Value* find(const std::string& key) const {
        for (const auto& entry : entries) {
            if (entry.first == key) return &entry.second;
        }
        return nullptr;
    }
    Value* find(const std::string& key) {
        for (auto& entry : entries) {
            if (entry.first == key) return &entry.second;
        }
        return nullptr;
    }
};

struct Cursor {
    const std::string& src;
    std::size_t i = 0;
    int line = 1;
    std::vector<ConfigError>& errors;

    bool eof() const { return i >= src.size(); }
    char peek() const { return src[i]; }
    char get() {
        char c = src[i++];
        if (c == '\n') ++line;
        return c;
    }

    void error(int at_line, std::string message) {
        if (errors.size() < kMaxErrors) {
            errors.push_back({at_line, std::move(message)});
        }
    }

    void skip_inline_ws() {
        while (!eof() &&
               (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
            ++i;
        }
    }

    // Whitespace, comments, and newlines; used inside bracketed values.
    void skip_open_ws() {
        for (;;) {
            skip_inline_ws();
            if (!eof() && peek() == '#') {
                while (!eof() && peek() != '\n') ++i;
                continue;
            }
            if (!eof() && peek() == '\n') {
                get();
                continue;
            }
            break;
        }
    }

    void skip_to_eol() {
        while (!eof() && peek() != '\n') ++i;
        if (!eof()) get();
    }
};

bool identifier_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool identifier_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-';
}

std::string parse_identifier(Cursor& c) {
    std::string name;
    if (c.eof() || !identifier_start(c.peek())) return name;
    while (!c.eof() && identifier_char(c.peek())) name.push_back(c.get());
    return name;
}

Value parse_value(Cursor& c, int depth);

Value parse_number(Cursor& c) {
    Value v;
    v.line = c.line;
    std::string token;
    while (!c.eof()) {
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' ||
            ch == '-' || ch == '.' || ch == 'e' || ch == 'E' || ch == '_') {
            token.push_back(c.get());
        } else {
            break;
        }
    }
    std::string stripped;
    for (char ch : token) {
        if (ch != '_') stripped.push_back(ch);
    }
    char* end = nullptr;
    double parsed =
        stripped.empty() ? 0.0 : std::strtod(stripped.c_str(), &end);
    if (stripped.empty() || end != stripped.c_str() + stripped.size() ||
        !std::isfinite(parsed)) {
        c.error(v.line, "malformed number '" + token + "'");
        if (token.empty() && !c.eof()) c.get();
        return v;
    }
    v.num = parsed;
    return v;
}

Value parse_string(Cursor& c) {
    Value v;
    v.kind = Value::Kind::text;
    v.line = c.line;
    c.get();
    while (!c.eof() && c.peek() != '"' && c.peek() != '\n') {
        v.text.push_back(c.get());
    }
    if (c.eof() || c.peek() != '"') {
        c.error(v.line, "unterminated string");
        return v;
    }
    c.get();
    return v;
}

Value parse_array(Cursor& c, int depth) {
    Value v;
    v.kind = Value::Kind::array;
    v.line = c.line;
    c.get();
    for (;;) {
        c.skip_open_ws();
        if (c.eof()) {
            c.error(v.line, "unterminated array");
            return v;
        }
        if (c.peek() == ']') {
            c.get();
            return v;
        }
        v.items.push_back(parse_value(c, depth + 1));
        c.skip_open_ws();
        if (!c.eof() && c.peek() == ',') {
            c.get();
            continue;
        }
        if (!c.eof() && c.peek() == ']') {
            c.get();
            return v;
        }
        c.error(c.line, "expected ',' or ']' in array");
        return v;
    }
}

Value parse_inline_table(Cursor& c, int depth) {
    Value v;
    v.kind = Value::Kind::table;
    v.line = c.line;
    c.get();
    for (;;) {
        c.skip_open_ws();
        if (c.eof()) {
            c.error(v.line, "unterminated inline table");
            return v;
        }
        if (c.peek() == '}') {
            c.get();
            return v;
        }
        int key_line = c.line;
        std::string key = parse_identifier(c);
        if (key.empty()) {
            c.error(key_line, "expected a key inside inline table");
            return v;
        }
        c.skip_inline_ws();
        if (c.eof() || c.peek() != '=') {
            c.error(key_line, "expected '=' after key '" + key + "'");
            return v;
        }
        c.get();
        c.skip_inline_ws();
        Value item = parse_value(c, depth + 1);
        item.line = key_line;
        if (v.find(key) != nullptr) {
            c.error(key_line, "duplicate key '" + key + "'");
        } else {
            v.entries.emplace_back(key, std::move(item));
        }
        c.skip_open_ws();
        if (!c.eof() && c.peek() == ',') {
            c.get();
            continue;
        }
        if (!c.eof() && c.peek() == '}') {
            c.get();
            return v;
        }
        c.error(c.line, "expected ',' or '}' in inline table");
        return v;
    }
}

Value parse_value(Cursor& c, int depth) {
    Value v;
    v.line = c.line;
    if (depth > kMaxDepth) {
        c.error(v.line, "value nesting too deep");
        c.skip_to_eol();
        return v;
    }
    c.skip_inline_ws();
    if (c.eof() || c.peek() == '\n') {
        c.error(v.line, "expected a value");
        return v;
    }
    char ch = c.peek();
    if (ch == '"') return parse_string(c);
    if (ch == '[') return parse_array(c, depth);
    if (ch == '{') return parse_inline_table(c, depth);
    if (identifier_start(ch)) {
        std::string word = parse_identifier(c);
        if (word == "true" || word == "false") {
            v.kind = Value::Kind::flag;
            v.flag_value = word == "true";
            return v;
        }
        c.error(v.line, "expected a value, got '" + word + "'");
        return v;
    }
    return parse_number(c);
}

// Consumes trailing whitespace/comment and the newline after a statement.
void finish_line(Cursor& c, int at_line) {
    c.skip_inline_ws();
    if (c.eof()) return;
    if (c.peek() == '#') {
        c.skip_to_eol();
        return;
    }
    if (c.peek() == '\n') {
        c.get();
        return;
    }
    c.error(at_line, "unexpected text after statement");
    c.skip_to_eol();
}

Value parse_document(const std::string& text,
                     std::vector<ConfigError>& errors) {
    Value root;
    root.kind = Value::Kind::table;
    Value scratch;
    scratch.kind = Value::Kind::table;
    Cursor c{text, 0, 1, errors};
    Value* current = &root;
    while (!c.eof()) {
        c.skip_inline_ws();
        if (c.eof()) break;
        char ch = c.peek();
        if (ch == '\n') {
            c.get();
            continue;
        }
        if (ch == '#') {
            c.skip_to_eol();
            continue;
        }
        if (ch == '[') {
            int at = c.line;
            c.get();
            bool array_table = !c.eof() && c.peek() == '[';
            if (array_table) c.get();
            c.skip_inline_ws();
            std::string name = parse_identifier(c);
            c.skip_inline_ws();
            bool closed = !name.empty() && !c.eof() && c.peek() == ']';
            if (closed) c.get();
            if (closed && array_table) {
                closed = !c.eof() && c.peek() == ']';
                if (closed) c.get();
            }
            if (!closed) {
                c.error(at, "malformed section header");
                c.skip_to_eol();
                current = &scratch;
                continue;
            }
            finish_line(c, at);
            if (array_table) {
                Value* arr = root.find(name);
                if (arr == nullptr) {
                    Value fresh;
                    fresh.kind = Value::Kind::array;
                    fresh.line = at;
                    root.entries.emplace_back(name, std::move(fresh));
                    arr = &root.entries.back().second;
                } else if (arr->kind != Value::Kind::array) {
                    c.error(at, "'" + name +
                                    "' is already defined and is not a "
                                    "table array");
                    current = &scratch;
                    continue;
                }
                Value element;
                element.kind = Value::Kind::table;
                element.line = at;
                arr->items.push_back(std::move(element));
                current = &arr->items.back();
            } else {
                if (root.find(name) != nullptr) {
                    c.error(at, "duplicate section [" + name + "]");
                    current = &scratch;
                    continue;
                }
                Value fresh;
                fresh.kind = Value::Kind::table;
                fresh.line = at;
                root.entries.emplace_back(name, std::move(fresh));
                current = &root.entries.back().second;
            }
            continue;
        }
        int at = c.line;
        std::string key = parse_identifier(c);
        if (key.empty()) {
            c.error(at, "expected 'key = value', a [section], or a comment");
            c.skip_to_eol();
            continue;
        }
        c.skip_inline_ws();
        if (c.eof() || c.peek() != '=') {
            c.error(at, "expected '=' after key '" + key + "'");
            c.skip_to_eol();
            continue;
        }
        c.get();
        Value v = parse_value(c, 0);
        v.line = at;
        finish_line(c, at);
        if (current->find(key) != nullptr) {
            c.error(at, "duplicate key '" + key + "'");
        } else {
            current->entries.emplace_back(key, std::move(v));
        }
    }
    return root;
}

void push_error(std::vector<ConfigError>& errors, int line,
                std::string message) {
    if (errors.size() < kMaxErrors) {
        errors.push_back({line, std::move(message)});
    }
}

void check_keys(const Value& table,
                std::initializer_list<const char*> allowed,
                const std::string& context,
                std::vector<ConfigError>& errors) {
    for (const auto& entry : table.entries) {
        bool known = false;
        for (const char* name : allowed) {
            if (entry.first == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            push_error(errors, entry.second.line,
                       context + ": unrecognized key '" + entry.first + "'");
        }
    }
}

bool read_number(const Value& v, const std::string& what,
                 std::vector<ConfigError>& errors, double* out) {
    if (v.kind != Value::Kind::number) {
        push_error(errors, v.line, what + " must be a number");
        return false;
    }
    *out = v.num;
    return true;
}

bool read_int(const Value& v, const std::string& what,
              std::vector<ConfigError>& errors, int* out) {
    double num = 0.0;
    if (!read_number(v, what, errors, &num)) return false;
    if (num != std::rint(num) || std::abs(num) > 1e9) {
        push_error(errors, v.line, what + " must be an integer");
        return false;
    }
    *out = static_cast<int>(num);
    return true;
}

bool read_number_array(const Value& v, const std::string& what,
                       std::vector<ConfigError>& errors,
                       std::vector<double>* out) {
    if (v.kind != Value::Kind::array) {
        push_error(errors, v.line, what + " must be an array of numbers");
        return false;
    }
    out->clear();
    for (const Value& item : v.items) {
        double num = 0.0;
        if (!read_number(item, what + " entries", errors, &num)) {
            return false;
        }
        out->push_back(num);
    }
    return true;
}

// A [lo, hi, count] triple expanded to an inclusive evenly spaced grid.
bool read_axis(const Value& v, const std::string& what,
               std::vector<ConfigError>& errors, std::vector<double>* out) {
    std::vector<double> triple;
    if (!read_number_array(v, what, errors, &triple)) return false;
    if (triple.size() != 3 || triple[2] != std::rint(triple[2]) ||
        triple[2] < 1.0 || triple[2] > 1e6) {
        push_error(errors, v.line,
                   what + " must be [lo, hi, count] with integer count >= 1");
        return false;
    }
    int count = static_cast<int>(triple[2]);
    out->clear();
    if (count == 1) {
        out->push_back(triple[0]);
        return true;
    }
    for (int i = 0; i < count; ++i) {
        out->push_back(triple[0] +
                       (triple[1] - triple[0]) * i / (count - 1.0));
    }
    return true;
}

bool read_matrix2(const Value& v, const std::string& what,
                  std::vector<ConfigError>& errors, double out[2][2]) {
    if (v.kind != Value::Kind::array || v.items.size() != 2) {
        push_error(errors, v.line, what + " must be a 2x2 array of numbers");
        return false;
    }
    for (int r = 0; r < 2; ++r) {
        std::vector<double> row;
        if (!read_number_array(v.items[r], what, errors, &row)) return false;
        if (row.size() != 2) {
            push_error(errors, v.line,
                       what + " must be a 2x2 array of numbers");
            return false;
        }
        out[r][0] = row[0];
        out[r][1] = row[1];
    }
    return true;
}

InterfaceCoupling read_coupling(const Value& root, int interface_count,
                                std::vector<ConfigError>& errors) {
    const Value* inline_form = root.find("coupling");
    const Value* explicit_form = root.find("coupling_conditions");
    InterfaceCoupling coupling;
    if (inline_form != nullptr && explicit_form != nullptr) {
        push_error(errors, inline_form->line,
                   "give either 'coupling' or 'coupling_conditions', "
                   "not both");
        return coupling;
    }
    if (inline_form == nullptr && explicit_form == nullptr) {
        if (interface_count > 0) {
            push_error(errors, 0,
                       "'coupling' is required when interfaces are present");
        }
        return coupling;
    }
    if (inline_form != nullptr) {
        const Value& v = *inline_form;
        if (v.kind != Value::Kind::table) {
            push_error(errors, v.line, "coupling must be a table");
            return coupling;
        }
        check_keys(v, {"type", "nu"}, "coupling", errors);
        const Value* type = v.find("type");
        if (type == nullptr || type->kind != Value::Kind::text ||
            type->text != "ideal") {
            push_error(errors, v.line,
                       "coupling.type must be the string \"ideal\" (use "
                       "coupling_conditions for explicit coefficients)");
            return coupling;
        }
        const Value* nu = v.find("nu");
        if (nu == nullptr) {
            push_error(errors, v.line,
                       "coupling: ideal contact requires the 'nu' field");
            return coupling;
        }
        double nu_value = 0.0;
        if (!read_number(*nu, "coupling.nu", errors, &nu_value)) {
            return coupling;
        }
        try {
            coupling = ideal_contact(nu_value, interface_count);
        } catch (const std::exception& problem) {
            push_error(errors, nu->line,
                       std::string("coupling: ") + problem.what());
        }
        return coupling;
    }
    const Value& list = *explicit_form;
    if (list.kind != Value::Kind::array) {
        push_error(errors, list.line,
                   "coupling_conditions must be a table array "
                   "([[coupling_conditions]] blocks)");
        return coupling;
    }
    for (const Value& entry : list.items) {
        if (entry.kind != Value::Kind::table) {
            push_error(errors, entry.line,
                       "coupling_conditions entries must be tables");
            return coupling;
        }
        check_keys(entry, {"alpha", "beta"}, "coupling_conditions", errors);
        const Value* alpha = entry.find("alpha");
        const Value* beta = entry.find("beta");
        if (alpha == nullptr || beta == nullptr) {
            push_error(errors, entry.line,
                       "coupling_conditions entries need 'alpha' and 'beta' "
                       "2x2 arrays");
            return coupling;
        }
        InterfaceConditions conditions;
        if (!read_matrix2(*alpha, "coupling_conditions.alpha", errors,
                          conditions.alpha) ||
            !read_matrix2(*beta, "coupling_conditions.beta", errors,
                          conditions.beta)) {
            return coupling;
        }
        coupling.at.push_back(conditions);
    }
    return coupling;
}

}  // namespace

std::uint64_t config_hash(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string format_error(const ConfigError& error) {
    if (error.line > 0) {
        return "line " + std::to_string(error.line) + ": " + error.message;
    }
    return "config: " + error.message;
}

ParseResult parse_config(const std::string& text) {
    ParseResult result;
    result.config.hash = config_hash(text);
    std::vector<ConfigError>& errors = result.errors;
    Value root = parse_document(text, errors);

    check_keys(root,
               {"transverse_dim", "layers", "interfaces", "coupling",
                "coupling_conditions", "times", "bumps", "probes",
                "probe_grid", "weights", "quadrature", "oracle", "output"},
               "document", errors);

    int m = 1;
    if (const Value* v = root.find("transverse_dim")) {
        if (read_int(*v, "transverse_dim", errors, &m) && m < 1) {
            push_error(errors, v->line, "transverse_dim must be >= 1");
            m = 1;
        }
        m = std::max(m, 1);
    }

    LayeredMedium medium;
    medium.transverse_dim = m;
    int medium_line = 0;
    if (const Value* v = root.find("layers")) {
        medium_line = v->line;
        if (v->kind != Value::Kind::array || v->items.empty()) {
            push_error(errors, v->line,
                       "layers must be a nonempty array of {a = ...} tables");
        } else {
            for (const Value& item : v->items) {
                double a = 0.0;
                if (item.kind != Value::Kind::table ||
                    item.find("a") == nullptr) {
                    push_error(errors, item.line,
                               "each layer must be a table with an 'a' "
                               "coefficient");
                    continue;
                }
                check_keys(item, {"a"}, "layers", errors);
                if (read_number(*item.find("a"), "layers.a", errors, &a)) {
                    medium.diffusivity_coeffs.push_back(a);
                }
            }
        }
    } else {
        push_error(errors, 0, "'layers' is required");
    }
    if (const Value* v = root.find("interfaces")) {
        read_number_array(*v, "interfaces", errors, &medium.interfaces);
    }

    InterfaceCoupling coupling =
        read_coupling(root, medium.interface_count(), errors);

    if (errors.empty()) {
        for (const std::string& problem : validate(medium, coupling)) {
            push_error(errors, medium_line, "medium: " + problem);
        }
    }

    std::vector<double> times;
    if (const Value* v = root.find("times")) {
        read_number_array(*v, "times", errors, &times);
    }

    std::vector<GaussianBump> bumps;
    if (const Value* v = root.find("bumps")) {
        if (v->kind != Value::Kind::array) {
            push_error(errors, v->line,
                       "bumps must be given as [[bumps]] blocks");
        } else {
            for (const Value& item : v->items) {
                if (item.kind != Value::Kind::table) {
                    push_error(errors, item.line,
                               "bumps entries must be tables");
                    continue;
                }
                check_keys(item,
                           {"layer", "amplitude", "center_x", "sigma_x",
                            "center_y", "sigma_y"},
                           "bumps", errors);
                GaussianBump bump;
                bump.center_y.assign(static_cast<std::size_t>(m), 0.0);
                bump.sigma_y.assign(static_cast<std::size_t>(m), 1.0);
                if (const Value* f = item.find("layer")) {
                    read_int(*f, "bumps.layer", errors, &bump.layer);
                }
                if (const Value* f = item.find("amplitude")) {
                    read_number(*f, "bumps.amplitude", errors,
                                &bump.amplitude);
                }
                if (const Value* f = item.find("center_x")) {
                    read_number(*f, "bumps.center_x", errors,
                                &bump.center_x);
                }
                if (const Value* f = item.find("sigma_x")) {
                    read_number(*f, "bumps.sigma_x", errors, &bump.sigma_x);
                }
                if (const Value* f = item.find("center_y")) {
                    read_number_array(*f, "bumps.center_y", errors,
                                      &bump.center_y);
                }
                if (const Value* f = item.find("sigma_y")) {
                    read_number_array(*f, "bumps.sigma_y", errors,
                                      &bump.sigma_y);
                }
                if (bump.center_y.size() != static_cast<std::size_t>(m) ||
                    bump.sigma_y.size() != static_cast<std::size_t>(m)) {
                    push_error(errors, item.line,
                               "bumps: center_y and sigma_y must have "
                               "transverse_dim entries");
                    continue;
                }
                bumps.push_back(std::move(bump));
            }
        }
    }

    std::vector<ProbePoint> probes;
    if (const Value* v = root.find("probe_grid")) {
        if (v->kind != Value::Kind::table) {
            push_error(errors, v->line, "probe_grid must be a table");
        } else {
            check_keys(*v, {"x", "y"}, "probe_grid", errors);
            std::vector<double> xs;
            std::vector<double> ys{0.0};
            bool ok = true;
            if (const Value* f = v->find("x")) {
                ok = read_axis(*f, "probe_grid.x", errors, &xs) && ok;
            } else {
                push_error(errors, v->line, "probe_grid needs an 'x' axis");
                ok = false;
            }
            if (const Value* f = v->find("y")) {
                ok = read_axis(*f, "probe_grid.y", errors, &ys) && ok;
            }
            if (ok) {
                for (double x : xs) {
                    for (double y0 : ys) {
                        ProbePoint p;
                        p.x = x;
                        p.y.assign(static_cast<std::size_t>(m), 0.0);
                        p.y[0] = y0;
                        probes.push_back(std::move(p));
                    }
                }
            }
        }
    }
    if (const Value* v = root.find("probes")) {
        if (v->kind != Value::Kind::array) {
            push_error(errors, v->line,
                       "probes must be given as [[probes]] blocks");
        } else {
            for (const Value& item : v->items) {
                if (item.kind != Value::Kind::table ||
                    item.find("x") == nullptr) {
                    push_error(errors, item.line,
                               "each probe needs an 'x' coordinate");
                    continue;
                }
                check_keys(item, {"x", "y"}, "probes", errors);
                ProbePoint p;
                p.y.assign(static_cast<std::size_t>(m), 0.0);
                read_number(*item.find("x"), "probes.x", errors, &p.x);
                if (const Value* f = item.find("y")) {
                    read_number_array(*f, "probes.y", errors, &p.y);
                }
                probes.push_back(std::move(p));
            }
        }
    }

    QuadratureSpec spec;
    if (const Value* v = root.find("quadrature")) {
        if (v->kind != Value::Kind::table) {
            push_error(errors, v->line, "quadrature must be a table");
        } else {
            check_keys(*v,
                       {"finite_nodes", "rho_truncation", "rho_nodes",
                        "alpha_nodes", "tau_schedule", "rel_tol", "abs_tol"},
                       "quadrature", errors);
            if (const Value* f = v->find("finite_nodes")) {
                read_int(*f, "quadrature.finite_nodes", errors,
                         &spec.finite_nodes);
            }
            if (const Value* f = v->find("rho_truncation")) {
                read_number(*f, "quadrature.rho_truncation", errors,
                            &spec.rho_truncation);
            }
            if (const Value* f = v->find("rho_nodes")) {
                read_int(*f, "quadrature.rho_nodes", errors, &spec.rho_nodes);
            }
            if (const Value* f = v->find("alpha_nodes")) {
                read_int(*f, "quadrature.alpha_nodes", errors,
                         &spec.alpha_nodes);
            }
            if (const Value* f = v->find("tau_schedule")) {
                read_number_array(*f, "quadrature.tau_schedule", errors,
                                  &spec.tau_schedule);
            }
            if (const Value* f = v->find("rel_tol")) {
                read_number(*f, "quadrature.rel_tol", errors, &spec.rel_tol);
            }
            if (const Value* f = v->find("abs_tol")) {
                read_number(*f, "quadrature.abs_tol", errors, &spec.abs_tol);
            }
            try {
                spec.validate();
            } catch (const std::exception& problem) {
                push_error(errors, v->line,
                           std::string("quadrature: ") + problem.what());
            }
        }
    }

    SpectralWeightMode mode = SpectralWeightMode::calibrated_default();
    if (const Value* v = root.find("weights")) {
        if (v->kind != Value::Kind::table) {
            push_error(errors, v->line, "weights must be a table");
        } else {
            check_keys(*v, {"mode", "constant", "exponent"}, "weights",
                       errors);
            std::string mode_name = "calibrated";
            if (const Value* f = v->find("mode")) {
                if (f->kind != Value::Kind::text ||
                    (f->text != "calibrated" && f->text != "literal")) {
                    push_error(errors, f->line,
                               "weights.mode must be \"calibrated\" or "
                               "\"literal\"");
                } else {
                    mode_name = f->text;
                }
            }
            const Value* constant = v->find("constant");
            const Value* exponent = v->find("exponent");
            if (mode_name == "literal") {
                if (constant != nullptr || exponent != nullptr) {
                    push_error(errors, v->line,
                               "weights: constant/exponent apply only to "
                               "the calibrated mode");
                }
                mode = SpectralWeightMode::literal();
            } else if (constant != nullptr || exponent != nullptr) {
                double c_value = 0.0;
                double p_value = 0.0;
                if (constant == nullptr || exponent == nullptr) {
                    push_error(errors, v->line,
                               "weights: give both 'constant' and "
                               "'exponent' or neither");
                } else if (read_number(*constant, "weights.constant", errors,
                                       &c_value) &&
                           read_number(*exponent, "weights.exponent", errors,
                                       &p_value) &&
                           errors.empty()) {
                    try {
                        mode = SpectralWeightMode::calibrated(c_value,
                                                              p_value, m,
                                                              spec);
                    } catch (const std::exception& problem) {
                        push_error(errors, v->line,
                                   std::string("weights: ") +
                                       problem.what());
                    }
                }
            }
        }
    }

    if (const Value* v = root.find("oracle")) {
        if (v->kind != Value::Kind::table) {
            push_error(errors, v->line, "oracle must be a table");
        } else {
            check_keys(
                *v, {"h", "dt", "x_lo", "x_hi", "y_lo", "y_hi", "tolerance"},
                "oracle", errors);
            OracleConfig& oracle = result.config.oracle;
            if (const Value* f = v->find("h")) {
                read_number(*f, "oracle.h", errors, &oracle.h);
            }
            if (const Value* f = v->find("dt")) {
                read_number(*f, "oracle.dt", errors, &oracle.dt);
            }
            if (const Value* f = v->find("x_lo")) {
                read_number(*f, "oracle.x_lo", errors, &oracle.x_lo);
            }
            if (const Value* f = v->find("x_hi")) {
                read_number(*f, "oracle.x_hi", errors, &oracle.x_hi);
            }
            if (const Value* f = v->find("y_lo")) {
                read_number(*f, "oracle.y_lo", errors, &oracle.y_lo);
            }
            if (const Value* f = v->find("y_hi")) {
                read_number(*f, "oracle.y_hi", errors, &oracle.y_hi);
            }
            if (const Value* f = v->find("tolerance")) {
                read_number(*f, "oracle.tolerance", errors,
                            &oracle.tolerance);
            }
        }
    }

    if (const Value* v = root.find("output")) {
        if (v->kind != Value::Kind::table) {
            push_error(errors, v->line, "output must be a table");
        } else {
            check_keys(*v, {"solution"}, "output", errors);
            if (const Value* f = v->find("solution")) {
                if (f->kind != Value::Kind::text || f->text.empty()) {
                    push_error(errors, f->line,
                               "output.solution must be a nonempty string");
                } else {
                    result.config.output_name = f->text;
                }
            }
        }
    }

    if (!errors.empty()) return result;

    try {
        result.config.scenario =
            make_scenario(std::move(medium), std::move(coupling),
                          std::move(bumps), std::move(times),
                          std::move(probes), mode, spec);
    } catch (const std::exception& problem) {
        push_error(errors, 0, std::string("scenario: ") + problem.what());
        return result;
    }
    for (const std::string& problem :
         validate_scenario(result.config.scenario)) {
        push_error(errors, 0, "scenario: " + problem);
    }
    result.ok = errors.empty();
    return result;
}

}  // namespace layerheat
