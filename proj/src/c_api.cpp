#include "foliacoh/foliacoh.h"

#include <cstring>
#include <exception>
#include <json.hpp>
#include <new>
#include <string>

#include "foliacoh/cech_mv.hpp"
#include "foliacoh/cone_relative.hpp"
#include "foliacoh/errors.hpp"
#include "foliacoh/model_io.hpp"
#include "foliacoh/pendulum.hpp"
#include "foliacoh/random_models.hpp"
#include "foliacoh/vertical_calculus.hpp"

struct fc_product_model {
  foliacoh::ProductModelDocument doc;
};

struct fc_cover_model {
  foliacoh::FoliatedCoverModel model;
};

struct fc_leaf_map {
  foliacoh::LeafToLeafMap map;
};

namespace {

thread_local std::string last_error;

template <typename F>
fc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return FC_OK;
  } catch (const foliacoh::InputError& e) {
    last_error = e.what();
    return FC_INPUT_ERROR;
  } catch (const foliacoh::InvariantError& e) {
    last_error = e.what();
    return FC_INVARIANT_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FC_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FC_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return FC_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw foliacoh::InputError(std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string product_report(const foliacoh::ProductModelDocument& doc, const char* cover_spec) {
  std::vector<std::vector<std::size_t>> subsets;
  if (cover_spec != nullptr) {
    subsets = foliacoh::parse_cover_spec(cover_spec);
  } else if (doc.cover) {
    subsets = *doc.cover;
  } else {
    std::vector<std::size_t> all(doc.model.base_points());
    for (std::size_t x = 0; x < all.size(); ++x) all[x] = x;
    subsets.push_back(std::move(all));
  }
  return foliacoh::compare_with_vertical(doc.model, subsets).to_json() + "\n";
}

std::string cover_report(const foliacoh::FoliatedCoverModel& c) {
  nlohmann::json j;
  const auto row = foliacoh::cech_row_cohomology(c);
  const auto classes = foliacoh::global_leaf_classes(c);
  j["cech_row"] = row;
  j["global_leaf_classes"] = classes;
  j["verdict"] = (!row.empty() && row[0] == classes) ? "pass" : "fail";
  return j.dump(2) + "\n";
}

foliacoh::pendulum::PendulumState state(const double x[3], const double v[3]) {
  require(x, "x");
  require(v, "v");
  return foliacoh::pendulum::PendulumState({x[0], x[1], x[2]}, {v[0], v[1], v[2]});
}

}  // namespace

extern "C" {

const char* fc_version(void) { return "0.1.0"; }

const char* fc_last_error(void) { return last_error.c_str(); }

void fc_string_free(char* s) { delete[] s; }

fc_status fc_product_model_from_json(const char* json, fc_product_model** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new fc_product_model{foliacoh::load_product_model(json)};
  });
}

void fc_product_model_free(fc_product_model* m) { delete m; }

fc_status fc_product_model_vertical_cohomology(const fc_product_model* m, size_t* dims, size_t capacity,
                                               size_t* count) {
  return guarded([&] {
    require(m, "model");
    require(count, "count");
    const auto h = foliacoh::vertical_cohomology(m->doc.model);
    *count = h.size();
    for (std::size_t k = 0; k < h.size() && k < capacity; ++k) {
      require(dims, "dims");
      dims[k] = h[k];
    }
  });
}

fc_status fc_product_model_report(const fc_product_model* m, const char* cover_spec, char** json_out) {
  return guarded([&] {
    require(m, "model");
    require(json_out, "json_out");
    *json_out = copy_out(product_report(m->doc, cover_spec));
  });
}

fc_status fc_cover_model_from_json(const char* json, fc_cover_model** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new fc_cover_model{foliacoh::load_cover_model(json)};
  });
}

void fc_cover_model_free(fc_cover_model* c) { delete c; }

fc_status fc_cover_model_report(const fc_cover_model* c, char** json_out) {
  return guarded([&] {
    require(c, "cover model");
    require(json_out, "json_out");
    *json_out = copy_out(cover_report(c->model));
  });
}

fc_status fc_cohomology_report(const char* model_json, const char* cover_spec, char** json_out) {
  return guarded([&] {
    require(model_json, "model_json");
    require(json_out, "json_out");
    if (foliacoh::is_cover_model_document(model_json)) {
      if (cover_spec != nullptr) throw foliacoh::InputError("--cover does not apply to a cover model");
      *json_out = copy_out(cover_report(foliacoh::load_cover_model(model_json)));
    } else {
      *json_out = copy_out(product_report(foliacoh::load_product_model(model_json), cover_spec));
    }
  });
}

fc_status fc_leaf_map_from_json(const char* json, fc_leaf_map** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new fc_leaf_map{foliacoh::load_leaf_map(json)};
  });
}

fc_status fc_leaf_map_random(uint64_t seed, fc_leaf_map** out) {
  return guarded([&] {
    require(out, "out");
    *out = new fc_leaf_map{foliacoh::random_models::random_leaf_map(seed)};
  });
}

void fc_leaf_map_free(fc_leaf_map* h) { delete h; }

fc_status fc_leaf_map_to_json(const fc_leaf_map* h, char** json_out) {
  return guarded([&] {
    require(h, "map");
    require(json_out, "json_out");
    *json_out = copy_out(foliacoh::dump_leaf_map(h->map));
  });
}

fc_status fc_leaf_map_les_report(const fc_leaf_map* h, char** json_out) {
  return guarded([&] {
    require(h, "map");
    require(json_out, "json_out");
    const auto les = foliacoh::long_exact_sequence(h->map);
    const int p = h->map.source().fiber_dimension();
    const int q = h->map.target().fiber_dimension();
    const auto bounds = foliacoh::check_degree_bounds(les, p, q);
    *json_out = copy_out(foliacoh::les_report_json(les, bounds) + "\n");
  });
}

fc_status fc_pendulum_energy(const double x[3], const double v[3], double* out) {
  return guarded([&] {
    require(out, "out");
    *out = foliacoh::pendulum::energy(state(x, v));
  });
}

fc_status fc_pendulum_moment(const double x[3], const double v[3], double* out) {
  return guarded([&] {
    require(out, "out");
    *out = foliacoh::pendulum::moment(state(x, v));
  });
}

fc_status fc_pendulum_bifurcation_csv(const char* alpha_range, char** csv_out) {
  return guarded([&] {
    require(alpha_range, "alpha_range");
    require(csv_out, "csv_out");
    *csv_out = copy_out(foliacoh::pendulum::bifurcation_csv(foliacoh::pendulum::parse_alpha_range(alpha_range)));
  });
}

fc_status fc_pendulum_critical_json(double energy, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = copy_out(foliacoh::pendulum::critical_json(energy));
  });
}

fc_status fc_pendulum_molecule_dot(double energy, char** dot_out) {
  return guarded([&] {
    require(dot_out, "dot_out");
    *dot_out = copy_out(foliacoh::pendulum::molecule_dot(foliacoh::pendulum::build_molecule(energy)));
  });
}

fc_status fc_pendulum_h0_json(double energy, size_t nodes_per_edge, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = copy_out(foliacoh::pendulum::h0_json(energy, nodes_per_edge));
  });
}

fc_status fc_pendulum_discrepancy_csv(const double* energies, size_t count, char** csv_out) {
  return guarded([&] {
    require(csv_out, "csv_out");
    if (count > 0) require(energies, "energies");
    const std::vector<double> es(energies, energies + count);
    *csv_out = copy_out(foliacoh::pendulum::discrepancy_table(es).to_csv());
  });
}

}  // extern "C"
