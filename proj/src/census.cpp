#include "gsurf/census.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "gsurf/alpha.hpp"
#include "gsurf/errors.hpp"
#include "gsurf/parallel.hpp"

namespace gsurf {

namespace {

std::vector<std::vector<int32_t>> group_faces(const Decomposition& d) {
  const int64_t nfaces = d.face_table().face_count();
  std::vector<std::vector<int32_t>> by_comp(d.component_count());
  for (int i = 0; i < d.component_count(); ++i)
    by_comp[i].reserve(d.components()[i].faces);
  for (int64_t f = 0; f < nfaces; ++f)
    by_comp[d.component_of_face((int32_t)f)].push_back((int32_t)f);
  return by_comp;
}

}  // namespace

Pipeline run_pipeline(const Group& g, const CensusOptions& opts) {
  Pipeline p;
  p.g = &g;
  Census& c = p.census;
  c.group_name = g.name;
  c.order = g.n;
  c.class_count = g.class_count();
  c.center_size = g.center_size();
  c.stats = build_stats(g);
  if (c.stats.faces > opts.large_face_guard && !opts.allow_large) {
    std::ostringstream os;
    os << "complex has " << c.stats.faces << " triangles (guard "
       << opts.large_face_guard << "); raise the guard to proceed";
    fail(ErrorKind::CapExceeded, os.str());
  }

  const int threads = resolve_threads(opts.threads);
  p.faces = std::make_unique<FaceTable>(g);
  p.decomposition = std::make_unique<Decomposition>(*p.faces, threads);
  const Decomposition& d = *p.decomposition;
  p.faces_by_component = group_faces(d);

  c.component_count = d.component_count();
  c.genus_census = d.genus_census();
  c.circle_count = d.circle_count();
  c.total_sheets = d.total_sheets();

  std::vector<AlphaCounts> alpha = alpha_census(g, threads);
  c.identities = verify_global_identities(g, alpha, d);
  c.identities_pass = true;
  for (const IdentityCheck& ic : c.identities)
    if (!ic.pass) c.identities_pass = false;

  CellOptions cell_opts;
  cell_opts.automorphism_search_cap = opts.automorphism_search_cap;
  cell_opts.with_flags = opts.with_flags;

  c.components.resize(d.component_count());
  std::exception_ptr first_error;
  std::mutex error_mutex;
  parallel_chunks(threads, d.component_count(),
                  [&](int64_t begin, int64_t end) {
                    try {
                      for (int64_t i = begin; i < end; ++i) {
                        ComponentSummary& s = c.components[i];
                        s.comp_index = (int)i;
                        s.cells = build_cell_complex(
                            *p.faces, d, (int)i, p.faces_by_component[i],
                            cell_opts);
                        s.schlafli = schlafli_symbol(s.cells);
                        if (opts.with_match) {
                          s.match = match_component(s.cells);
                          s.matched = true;
                        }
                      }
                    } catch (...) {
                      std::lock_guard<std::mutex> lock(error_mutex);
                      if (!first_error) first_error = std::current_exception();
                    }
                  });
  if (first_error) std::rethrow_exception(first_error);

  std::stable_sort(c.components.begin(), c.components.end(),
                   [](const ComponentSummary& a, const ComponentSummary& b) {
                     auto key = [](const ComponentSummary& s) {
                       return std::make_tuple(s.cells.genus, s.cells.n,
                                              s.cells.lambda1, s.cells.lambda2,
                                              s.cells.tri_faces,
                                              s.cells.component_id);
                     };
                     return key(a) < key(b);
                   });
  return p;
}

Pipeline run_pipeline(Group&& g, const CensusOptions& opts) {
  auto owned = std::make_unique<Group>(std::move(g));
  Pipeline p = run_pipeline(*owned, opts);
  p.group = std::move(owned);
  p.g = p.group.get();
  return p;
}

Census build_census(const Group& g, const CensusOptions& opts) {
  return run_pipeline(g, opts).census;
}

}  // namespace gsurf
