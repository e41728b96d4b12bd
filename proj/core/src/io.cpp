#include "modalg/io.hpp"

#include <fstream>
#include <sstream>

#include "modalg/error.hpp"
#include "modalg/group_ops.hpp"

namespace modalg::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw InvalidInput(source + ": " + field + ": " + what);
}

std::int64_t get_int(const json& doc, const std::string& key, const std::string& source) {
  if (!doc.contains(key)) fail(source, key, "missing");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) fail(source, key, "expected an integer");
  return v.get<std::int64_t>();
}

std::vector<FpVector> parse_rows(const json& rows, unsigned p, std::size_t n, const std::string& source,
                                 const std::string& field) {
  if (!rows.is_array()) fail(source, field, "expected an array of residue arrays");
  std::vector<FpVector> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = field + "[" + std::to_string(r) + "]";
    const json& row = rows[r];
    if (!row.is_array() || row.size() != n) fail(source, where, "expected " + std::to_string(n) + " residues");
    FpVector v(p, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!row[i].is_number_integer()) fail(source, where + "[" + std::to_string(i) + "]", "expected an integer");
      const auto x = row[i].get<std::int64_t>();
      if (x < 0 || x >= static_cast<std::int64_t>(p))
        fail(source, where + "[" + std::to_string(i) + "]", "residue out of range 0.." + std::to_string(p - 1));
      v.set(i, static_cast<unsigned>(x));
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Coordinates 0 and e swap when the identity moves to index 0.
void swap_coords(std::vector<FpVector>& rows, std::size_t e) {
  if (e == 0) return;
  for (auto& v : rows) {
    const unsigned a = v[0], b = v[e];
    v.set(0, b);
    v.set(e, a);
  }
}

json int_array(const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(x);
  return out;
}

}  // namespace

GroupInput parse_group_input(const json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "<root>", "expected an object");
  const auto p = get_int(doc, "p", source);
  if (p != 2 && p != 3 && p != 5) fail(source, "p", "unsupported prime " + std::to_string(p));
  const auto order = get_int(doc, "order", source);
  if (order < 1 || order > static_cast<std::int64_t>(kMaxGroupOrder))
    fail(source, "order", "must be between 1 and " + std::to_string(kMaxGroupOrder));
  const auto n = static_cast<std::size_t>(order);
  if (!doc.contains("table")) fail(source, "table", "missing");
  const json& table = doc.at("table");
  if (!table.is_array() || table.size() != n) fail(source, "table", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<int>> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    const json& row = table[r];
    const std::string where = "table[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != n) fail(source, where, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      if (!row[c].is_number_integer()) fail(source, where + "[" + std::to_string(c) + "]", "expected an integer");
      const auto x = row[c].get<std::int64_t>();
      if (x < 0 || x >= order) fail(source, where + "[" + std::to_string(c) + "]", "entry out of range");
      rows[r].push_back(static_cast<int>(x));
    }
  }
  std::string name = source;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) fail(source, "name", "expected a string");
    name = doc.at("name").get<std::string>();
  }

  std::size_t identity = 0;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) ok = rows[e][c] == static_cast<int>(c);
    if (ok) {
      identity = e;
      break;
    }
  }

  GroupInput out;
  try {
    out.group = PGroup::from_table(static_cast<unsigned>(p), rows, name);
  } catch (const InvalidInput& e) {
    fail(source, "table", e.what());
  }

  if (doc.contains("factorization")) {
    const json& f = doc.at("factorization");
    if (!f.is_object() || !f.contains("B") || !f.contains("C"))
      fail(source, "factorization", "expected an object with B and C");
    FactorizationBases bases{parse_rows(f.at("B"), static_cast<unsigned>(p), n, source, "factorization.B"),
                             parse_rows(f.at("C"), static_cast<unsigned>(p), n, source, "factorization.C")};
    swap_coords(bases.b, identity);
    swap_coords(bases.c, identity);
    const GroupAlgebra ctx(out.group);
    for (auto [key, rows_of] : {std::pair{"factorization.B", &bases.b}, std::pair{"factorization.C", &bases.c}}) {
      try {
        AugmentedSubalgebra(ctx, FpSubspace::span(ctx.prime(), ctx.dim(), *rows_of));
      } catch (const CheckFailed& e) {
        fail(source, key, e.what());
      }
    }
    out.factorization = std::move(bases);
  }
  return out;
}

GroupInput parse_group_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InvalidInput(source + ": line " + std::to_string(line) + " column " + std::to_string(column) +
                       ": malformed JSON");
  }
  return parse_group_input(doc, source);
}

GroupInput load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path.string() + ": cannot open");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_group_text(text.str(), path.string());
}

json group_json(const PGroup& g) {
  return json{{"p", g.prime()}, {"order", g.order()}, {"name", g.name()}, {"table", g.table_rows()}};
}

json group_json(const PGroup& g, const FactorizationBases& fact) {
  json out = group_json(g);
  json b = json::array(), c = json::array();
  for (const auto& v : fact.b) b.push_back(vector_json(v));
  for (const auto& v : fact.c) c.push_back(vector_json(v));
  out["factorization"] = json{{"B", b}, {"C", c}};
  return out;
}

json vector_json(const FpVector& v) { return v.coords(); }
json subspace_json(const FpSubspace& s) {
  json out = json::array();
  for (const auto& v : s.basis()) out.push_back(vector_json(v));
  return out;
}

json invariants_json(const AbelianInvariants& inv) { return inv.exponents; }

json fingerprint_json(const PGroup& g) {
  const Fingerprint f = fingerprint(g);
  return json{{"order", f.order},
              {"abelianization", invariants_json(f.abelianization)},
              {"center_size", f.center_size},
              {"exponent", f.exponent}};
}

json subgroup_json(const Subgroup& h) {
  return json{{"order", h.size()}, {"elements", int_array(h.elements())}};
}

json report_json(const IdentityReport& r) {
  json out{{"id", r.id},          {"relation", r.relation}, {"params", r.params},
           {"left_dim", r.left_dim}, {"right_dim", r.right_dim}, {"equal", r.equal},
           {"holds", r.holds()}};
  if (r.witness) out["witness"] = vector_json(*r.witness);
  if (!r.side_checks.empty()) {
    json side = json::object();
    for (const auto& [name, ok] : r.side_checks) side[name] = ok;
    out["side_checks"] = side;
  }
  return out;
}

json report_json(const CyclicFactorResult& r) {
  return json{{"i", r.i}, {"has_factor", r.has_factor}, {"exponent_found", r.exponent_found},
              {"r_exponent", r.r_exponent}};
}

json report_json(const DecompositionReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back(json{{"level", s.level},
                         {"group_order", s.group_order},
                         {"s", s.s},
                         {"b_order", s.b_order},
                         {"omega_containment", s.omega_containment},
                         {"jennings_nonmembership", s.jennings_nonmembership},
                         {"lambda_nonkernel", s.lambda_nonkernel},
                         {"lambda_domain_dim", s.lambda_domain_dim},
                         {"lambda_kernel_dim", s.lambda_kernel_dim},
                         {"v_dim", s.v_dim},
                         {"homocyclic_rank", s.homocyclic_rank},
                         {"h", s.h},
                         {"h_order", s.h_order},
                         {"j_dim", s.j_dim},
                         {"complement_order", s.complement_order}});
  }
  return json{{"verified", r.verified},
              {"b_side", subgroup_json(r.b_side)},
              {"c_side", subgroup_json(r.c_side)},
              {"b_generators", int_array(r.b_generators)},
              {"c_generators", int_array(r.c_generators)},
              {"b_invariants", invariants_json(r.b_invariants)},
              {"group_basis_invariants", invariants_json(r.basis_invariants)},
              {"group_basis_sampled", r.group_basis_sampled},
              {"steps", steps}};
}

json report_json(const Certificate& c) {
  json out{{"kind", to_string(c.kind)},
           {"directly_indecomposable", c.directly_indecomposable},
           {"d", c.d},
           {"three_generated", c.three_generated},
           {"derived_cyclic", c.derived_cyclic},
           {"derived_order", c.derived_order}};
  if (c.derived_generator) out["derived_generator"] = *c.derived_generator;
  return out;
}

}  // namespace modalg::io
