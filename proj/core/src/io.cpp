#include "hly/io.hpp"

#include "hly/errors.hpp"
#include "json.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace hly {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

void require_keys(const json& j, const char* what,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object())
    throw ParseError(std::string(what) + " document must be a JSON object");
  for (const char* k : required)
    if (!j.contains(k))
      throw ParseError(std::string(what) + " document is missing key '" + k +
                       "'");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : required)
      if (item.key() == k) known = true;
    for (const char* k : optional)
      if (item.key() == k) known = true;
    if (!known)
      throw ParseError(std::string(what) + " document has unknown key '" +
                       item.key() + "'");
  }
}

int get_count(const json& v, const char* what) {
  if (!v.is_number_integer() || v.is_number_float())
    throw ParseError(std::string(what) + " must be a JSON integer");
  long long x = v.get<long long>();
  if (x < 0 || x > 1'000'000)
    throw ValidationError(std::string(what) + " out of range");
  return static_cast<int>(x);
}

/// One sparse entry: fixed-length array of integers followed by one fraction
/// string. Returns the indices; writes the value through `value`.
std::vector<int> get_entry(const json& v, size_t index_count,
                           const char* what, Scalar& value) {
  if (!v.is_array() || v.size() != index_count + 1)
    throw ParseError(std::string(what) + " entries must be arrays of " +
                     std::to_string(index_count) + " indices and one value");
  std::vector<int> idx;
  idx.reserve(index_count);
  for (size_t t = 0; t < index_count; ++t) {
    const json& e = v[t];
    if (!e.is_number_integer())
      throw ParseError(std::string(what) + " indices must be JSON integers");
    long long x = e.get<long long>();
    if (x < 0 || x > 1'000'000)
      throw ValidationError(std::string(what) + " index out of range");
    idx.push_back(static_cast<int>(x));
  }
  const json& e = v[index_count];
  if (!e.is_string())
    throw ParseError(std::string(what) +
                     " values must be fraction strings like \"-3/2\"");
  value = parse_scalar(e.get<std::string>());
  return idx;
}

void require_index(int i, int bound, const char* what) {
  if (i >= bound)
    throw ValidationError(std::string(what) + " index " + std::to_string(i) +
                          " out of range for dimension " +
                          std::to_string(bound));
}

void require_unique(std::set<std::vector<int>>& seen, std::vector<int> key,
                    const char* what) {
  if (!seen.insert(std::move(key)).second)
    throw ValidationError(std::string(what) + " has a duplicate entry");
}

Mat get_dense(const json& v, int rows, int cols, const char* what) {
  if (!v.is_array())
    throw ParseError(std::string(what) + " must be an array of rows");
  if (static_cast<int>(v.size()) != rows)
    throw ValidationError(std::string(what) + " has the wrong row count");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = v[static_cast<size_t>(r)];
    if (!row.is_array())
      throw ParseError(std::string(what) + " rows must be arrays");
    if (static_cast<int>(row.size()) != cols)
      throw ValidationError(std::string(what) + " has the wrong column count");
    for (int c = 0; c < cols; ++c) {
      const json& e = row[static_cast<size_t>(c)];
      if (!e.is_string())
        throw ParseError(std::string(what) +
                         " entries must be fraction strings like \"-3/2\"");
      m.at(r, c) = parse_scalar(e.get<std::string>());
    }
  }
  return m;
}

json dense_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(format_scalar(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json tensor_entries(const MultiTensor& t) {
  json out = json::array();
  t.for_each([&](std::span<const int> idx, int m, const Scalar& v) {
    if (is_zero(v)) return;
    json e = json::array();
    for (int i : idx) e.push_back(i);
    e.push_back(m);
    e.push_back(format_scalar(v));
    out.push_back(std::move(e));
  });
  return out;
}

MultiTensor tensor_from_entries(const SuperSpace& space, int arity,
                                const json& v, const char* what) {
  if (!v.is_array())
    throw ParseError(std::string(what) + " must be an array of entries");
  MultiTensor t = MultiTensor::zero(space, arity);
  std::set<std::vector<int>> seen;
  for (const json& e : v) {
    Scalar val;
    std::vector<int> idx =
        get_entry(e, static_cast<size_t>(arity) + 1, what, val);
    for (int i : idx) require_index(i, space.dim(), what);
    require_unique(seen, idx, what);
    t.set(std::span(idx).first(arity), idx.back(), std::move(val));
  }
  return t;
}

}  // namespace

HomLYSA algebra_from_json(const std::string& text) {
  json j = parse_document(text);
  require_keys(j, "algebra",
               {"even_dim", "odd_dim", "alpha", "bracket2", "bracket3"},
               {"name", "description"});
  SuperSpace space{get_count(j["even_dim"], "even_dim"),
                   get_count(j["odd_dim"], "odd_dim")};
  const int n = space.dim();
  GradedMap alpha = GradedMap::endo(space, Parity::even,
                                    get_dense(j["alpha"], n, n, "alpha"));
  MultiTensor b2 = tensor_from_entries(space, 2, j["bracket2"], "bracket2");
  MultiTensor b3 = tensor_from_entries(space, 3, j["bracket3"], "bracket3");
  return HomLYSA::make(space, std::move(b2), std::move(b3), std::move(alpha));
}

std::string algebra_to_json(const HomLYSA& a, const std::string& name,
                            const std::string& description) {
  json j;
  j["even_dim"] = a.space().even_dim;
  j["odd_dim"] = a.space().odd_dim;
  j["alpha"] = dense_to_json(a.alpha().mat());
  j["bracket2"] = tensor_entries(a.bracket2());
  j["bracket3"] = tensor_entries(a.bracket3());
  if (!name.empty()) j["name"] = name;
  if (!description.empty()) j["description"] = description;
  return j.dump(2) + "\n";
}

RepTriple rep_from_json(const HomLYSA& a, const std::string& text) {
  json j = parse_document(text);
  require_keys(j, "representation",
               {"module_even_dim", "module_odd_dim", "beta", "rho", "D",
                "theta"});
  SuperSpace module{get_count(j["module_even_dim"], "module_even_dim"),
                    get_count(j["module_odd_dim"], "module_odd_dim")};
  const int n = a.dim();
  const int m = module.dim();
  GradedMap beta = GradedMap::endo(
      module, Parity::even, get_dense(j["beta"], m, m, "beta"));

  const json& vr = j["rho"];
  if (!vr.is_array())
    throw ParseError("rho must be an array of entries");
  std::vector<Mat> rho_mats(static_cast<size_t>(n), Mat(m, m));
  std::set<std::vector<int>> seen_rho;
  for (const json& e : vr) {
    Scalar val;
    std::vector<int> idx = get_entry(e, 3, "rho", val);
    require_index(idx[0], n, "rho algebra");
    require_index(idx[1], m, "rho row");
    require_index(idx[2], m, "rho column");
    require_unique(seen_rho, idx, "rho");
    rho_mats[static_cast<size_t>(idx[0])].at(idx[1], idx[2]) = std::move(val);
  }

  auto bilinear_mats = [&](const char* key) {
    const json& v = j[key];
    if (!v.is_array())
      throw ParseError(std::string(key) + " must be an array of entries");
    std::vector<Mat> mats(static_cast<size_t>(n) * n, Mat(m, m));
    std::set<std::vector<int>> seen;
    for (const json& e : v) {
      Scalar val;
      std::vector<int> idx = get_entry(e, 4, key, val);
      require_index(idx[0], n, key);
      require_index(idx[1], n, key);
      require_index(idx[2], m, key);
      require_index(idx[3], m, key);
      require_unique(seen, idx, key);
      mats[static_cast<size_t>(idx[0]) * n + idx[1]].at(idx[2], idx[3]) =
          std::move(val);
    }
    return mats;
  };
  std::vector<Mat> d_mats = bilinear_mats("D");
  std::vector<Mat> th_mats = bilinear_mats("theta");

  std::vector<GradedMap> rho, dmap, theta;
  rho.reserve(rho_mats.size());
  for (int i = 0; i < n; ++i)
    rho.push_back(GradedMap::endo(module, a.space().parity(i),
                                  std::move(rho_mats[static_cast<size_t>(i)])));
  dmap.reserve(d_mats.size());
  theta.reserve(th_mats.size());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Parity p = a.space().parity(i) + a.space().parity(k);
      size_t f = static_cast<size_t>(i) * n + k;
      dmap.push_back(GradedMap::endo(module, p, std::move(d_mats[f])));
      theta.push_back(GradedMap::endo(module, p, std::move(th_mats[f])));
    }
  return RepTriple::make(a.space(), module, std::move(beta), std::move(rho),
                         std::move(dmap), std::move(theta));
}

std::string rep_to_json(const RepTriple& r) {
  const int n = r.algebra_space().dim();
  const int m = r.module_space().dim();
  json j;
  j["module_even_dim"] = r.module_space().even_dim;
  j["module_odd_dim"] = r.module_space().odd_dim;
  j["beta"] = dense_to_json(r.beta().mat());
  json rho = json::array();
  for (int i = 0; i < n; ++i)
    for (int row = 0; row < m; ++row)
      for (int col = 0; col < m; ++col) {
        const Scalar& v = r.rho(i).mat().at(row, col);
        if (!is_zero(v)) rho.push_back(json{i, row, col, format_scalar(v)});
      }
  j["rho"] = std::move(rho);
  auto bilinear = [&](auto&& get) {
    json out = json::array();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int row = 0; row < m; ++row)
          for (int col = 0; col < m; ++col) {
            const Scalar& v = get(i, k).mat().at(row, col);
            if (!is_zero(v))
              out.push_back(json{i, k, row, col, format_scalar(v)});
          }
    return out;
  };
  j["D"] = bilinear([&](int i, int k) -> const GradedMap& {
    return r.Dmap(i, k);
  });
  j["theta"] = bilinear([&](int i, int k) -> const GradedMap& {
    return r.theta(i, k);
  });
  return j.dump(2) + "\n";
}

Deformation deformation_from_json(const HomLYSA& base,
                                  const std::string& text) {
  json j = parse_document(text);
  require_keys(j, "deformation", {"order", "f", "g"});
  int order = get_count(j["order"], "order");
  if (order < 1)
    throw ValidationError("deformation order must be at least 1");
  const SuperSpace& sp = base.space();
  const int n = sp.dim();

  auto coeffs = [&](const char* key, int arity) {
    const json& v = j[key];
    if (!v.is_array())
      throw ParseError(std::string(key) + " must be an array of entries");
    std::vector<MultiTensor> ts(static_cast<size_t>(order),
                                MultiTensor::zero(sp, arity));
    std::set<std::vector<int>> seen;
    for (const json& e : v) {
      Scalar val;
      std::vector<int> idx =
          get_entry(e, static_cast<size_t>(arity) + 2, key, val);
      if (idx[0] < 1 || idx[0] > order)
        throw ValidationError(std::string(key) +
                              " coefficient order out of range");
      for (size_t t = 1; t < idx.size(); ++t)
        require_index(idx[t], n, key);
      require_unique(seen, idx, key);
      ts[static_cast<size_t>(idx[0]) - 1].set(
          std::span(idx).subspan(1, static_cast<size_t>(arity)), idx.back(),
          std::move(val));
    }
    return ts;
  };
  std::vector<MultiTensor> f = coeffs("f", 2);
  std::vector<MultiTensor> g = coeffs("g", 3);
  return Deformation::make(base, order, std::move(f), std::move(g));
}

std::string deformation_to_json(const Deformation& d) {
  json j;
  j["order"] = d.order();
  auto entries = [&](auto&& get) {
    json out = json::array();
    for (int ord = 1; ord <= d.order(); ++ord)
      get(ord).for_each(
          [&](std::span<const int> idx, int m, const Scalar& v) {
            if (is_zero(v)) return;
            json e = json::array();
            e.push_back(ord);
            for (int i : idx) e.push_back(i);
            e.push_back(m);
            e.push_back(format_scalar(v));
            out.push_back(std::move(e));
          });
    return out;
  };
  j["f"] = entries([&](int ord) -> const MultiTensor& { return d.f(ord); });
  j["g"] = entries([&](int ord) -> const MultiTensor& { return d.g(ord); });
  return j.dump(2) + "\n";
}

FormalIso iso_from_json(const HomLYSA& base, const std::string& text) {
  json j = parse_document(text);
  require_keys(j, "iso", {"order", "phi"});
  int order = get_count(j["order"], "order");
  if (order < 1) throw ValidationError("iso order must be at least 1");
  const SuperSpace& sp = base.space();
  const int n = sp.dim();
  const json& v = j["phi"];
  if (!v.is_array()) throw ParseError("phi must be an array of entries");
  std::vector<Mat> mats(static_cast<size_t>(order), Mat(n, n));
  std::set<std::vector<int>> seen;
  for (const json& e : v) {
    Scalar val;
    std::vector<int> idx = get_entry(e, 3, "phi", val);
    if (idx[0] < 1 || idx[0] > order)
      throw ValidationError("phi coefficient order out of range");
    require_index(idx[1], n, "phi row");
    require_index(idx[2], n, "phi column");
    require_unique(seen, idx, "phi");
    mats[static_cast<size_t>(idx[0]) - 1].at(idx[1], idx[2]) = std::move(val);
  }
  std::vector<GradedMap> phi;
  phi.reserve(mats.size());
  for (Mat& m : mats)
    phi.push_back(GradedMap::endo(sp, Parity::even, std::move(m)));
  return FormalIso::make(base.alpha(), order, std::move(phi));
}

std::string iso_to_json(const FormalIso& iso) {
  const int n = iso.space().dim();
  json j;
  j["order"] = iso.order();
  json phi = json::array();
  for (int ord = 1; ord <= iso.order(); ++ord)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const Scalar& v = iso.phi(ord).mat().at(r, c);
        if (!is_zero(v)) phi.push_back(json{ord, r, c, format_scalar(v)});
      }
  j["phi"] = std::move(phi);
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading file: " + path);
  return std::move(buf).str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw IoError("failed while writing file: " + path);
}

HomLYSA load_algebra(const std::string& path) {
  return algebra_from_json(read_text_file(path));
}

RepTriple load_rep(const HomLYSA& a, const std::string& path) {
  return rep_from_json(a, read_text_file(path));
}

Deformation load_deformation(const HomLYSA& base, const std::string& path) {
  return deformation_from_json(base, read_text_file(path));
}

FormalIso load_iso(const HomLYSA& base, const std::string& path) {
  return iso_from_json(base, read_text_file(path));
}

}  // namespace hly
