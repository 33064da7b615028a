#include "nichols.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "nichols/classify.hpp"
#include "nichols/superhopf.hpp"
#include "nichols/tensor_algebra.hpp"
#include "nichols/thread_pool.hpp"
#include "nichols/weyl.hpp"

using namespace nichols;

struct nichols_braiding {
  BraidingMatrix matrix;
};

struct nichols_hopf {
  SuperHopfPresentation presentation;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nichols_status status_of(const Error& e) {
  switch (e.kind()) {
    case ErrKind::Parse: return NICHOLS_ERR_PARSE;
    case ErrKind::Cap: return NICHOLS_ERR_CAP;
    case ErrKind::Verify: return NICHOLS_ERR_VERIFY;
    case ErrKind::Arg: return NICHOLS_ERR_ARG;
    case ErrKind::Internal: return NICHOLS_ERR_INTERNAL;
  }
  return NICHOLS_ERR_INTERNAL;
}

template <typename Fn>
nichols_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NICHOLS_ERR_INTERNAL;
  }
}

struct ResolvedOptions {
  Int object_cap = kDefaultObjectCap;
  Int root_cap = kDefaultRootCap;
  Int degree_cap = kDefaultDegreeCap;
  Int block_cap = kDefaultBlockCap;
  Int max_degree = 4;
  bool verify = false;
  bool minimal = false;
  int threads = 1;
  std::optional<SpecializationMap> spec;
};

ResolvedOptions resolve(const nichols_options* opt) {
  ResolvedOptions r;
  if (!opt) return r;
  if (opt->object_cap > 0) r.object_cap = opt->object_cap;
  if (opt->root_cap > 0) r.root_cap = opt->root_cap;
  if (opt->degree_cap > 0) r.degree_cap = opt->degree_cap;
  if (opt->block_cap > 0) r.block_cap = opt->block_cap;
  if (opt->max_degree > 0) r.max_degree = opt->max_degree;
  r.verify = opt->verify != 0;
  r.minimal = opt->minimal != 0;
  if (opt->threads > 0) r.threads = opt->threads;
  if (opt->specialization && opt->specialization[0]) {
    if (opt->target_order <= 0)
      throw Error(ErrKind::Arg, "a specialization needs a positive target order");
    SpecializationMap m = SpecializationMap::parse(opt->specialization);
    m.target_order = opt->target_order;
    r.spec = m;
  }
  return r;
}

}  // namespace

extern "C" {

void nichols_options_init(nichols_options* opt) {
  if (!opt) return;
  std::memset(opt, 0, sizeof(*opt));
  opt->threads = 1;
}

nichols_status nichols_braiding_parse(const char* text, nichols_braiding** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    auto* h = new nichols_braiding{BraidingMatrix::parse(text)};
    *out = h;
    return NICHOLS_OK;
  });
}

void nichols_braiding_free(nichols_braiding* b) { delete b; }

nichols_status nichols_hopf_parse(const char* text, nichols_hopf** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    auto* h = new nichols_hopf{SuperHopfPresentation::parse(text)};
    *out = h;
    return NICHOLS_OK;
  });
}

void nichols_hopf_free(nichols_hopf* h) { delete h; }

nichols_status nichols_braiding_serialize(const nichols_braiding* b, char** report) {
  if (!b || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    *report = dup_string(b->matrix.serialize());
    return NICHOLS_OK;
  });
}

nichols_status nichols_classify(const nichols_braiding* b, const nichols_options* opt, char** report) {
  if (!b || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    ResolvedOptions ro = resolve(opt);
    ClassifyResult res = classify_braiding(b->matrix, true, ro.object_cap, ro.root_cap);
    *report = dup_string(res.report());
    if (!res.all_cross_checks_ok()) {
      g_last_error = "classification cross-check failed";
      return NICHOLS_ERR_VERIFY;
    }
    return NICHOLS_OK;
  });
}

nichols_status nichols_roots(const nichols_braiding* b, const nichols_options* opt, char** report) {
  if (!b || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    ResolvedOptions ro = resolve(opt);
    GroupoidAtlas atlas = explore(b->matrix, ro.object_cap, ro.root_cap);
    if (!atlas.complete()) {
      *report = dup_string(atlas_text(atlas));
      g_last_error = "exploration incomplete";
      return NICHOLS_ERR_CAP;
    }
    std::ostringstream out;
    out << "objects = " << atlas.objects.size() << "\n";
    for (size_t o = 0; o < atlas.objects.size(); ++o) {
      auto pos = positive_roots(atlas, static_cast<Int>(o));
      out << "object " << (o + 1) << " positive roots (" << pos.size() << ")\n" << root_set_text(pos);
    }
    *report = dup_string(out.str());
    return NICHOLS_OK;
  });
}

nichols_status nichols_weyl(const nichols_braiding* b, const nichols_options* opt, char** report) {
  if (!b || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    ResolvedOptions ro = resolve(opt);
    GroupoidAtlas atlas = explore(b->matrix, ro.object_cap, ro.root_cap);
    std::ostringstream out;
    out << atlas_text(atlas);
    if (!atlas.complete()) {
      *report = dup_string(out.str());
      g_last_error = "exploration incomplete";
      return NICHOLS_ERR_CAP;
    }
    RootSystemReport rep = verify_root_system(atlas);
    if (rep.ok()) {
      out << "root system axioms: all pass\n";
      *report = dup_string(out.str());
      return NICHOLS_OK;
    }
    for (const auto& v : rep.violations) out << "violation: " << v << "\n";
    *report = dup_string(out.str());
    g_last_error = "root system axioms violated";
    return NICHOLS_ERR_VERIFY;
  });
}

nichols_status nichols_hilbert(const nichols_braiding* b, const nichols_options* opt, char** report) {
  if (!b || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    ResolvedOptions ro = resolve(opt);
    ThreadPool pool(ro.threads);
    HilbertTable table = graded_dims(b->matrix, ro.max_degree, ro.spec ? &*ro.spec : nullptr,
                                     ro.block_cap, &pool);
    *report = dup_string(table.str());
    return NICHOLS_OK;
  });
}

nichols_status nichols_relations(const nichols_braiding* b, const nichols_options* opt, char** report) {
  if (!b || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    ResolvedOptions ro = resolve(opt);
    ClassifyResult cls = classify_braiding(b->matrix, false, ro.object_cap, ro.root_cap);
    auto rels = relations_for(b->matrix, cls, ro.minimal, ro.degree_cap);
    std::ostringstream out;
    std::atomic<bool> failed{false};
    ThreadPool pool(ro.threads);
    std::vector<std::string> lines(rels.size());
    pool.parallel_for(rels.size(), [&](size_t i) {
      const Relation& r = rels[i];
      std::ostringstream line;
      line << r.tag << " : degree " << vec_str(r.degree) << " : ";
      if (!ro.verify) {
        line << (r.element ? "emitted" : "emitted (beyond degree cap)");
      } else if (!r.element) {
        line << "SKIPPED degree " << total_degree(r.degree) << " exceeds cap " << ro.degree_cap;
      } else {
        VerifyOutcome v = verify_relation(b->matrix, *r.element, ro.spec ? &*ro.spec : nullptr,
                                          ro.degree_cap);
        if (v.annihilated) {
          line << "PASS";
        } else {
          line << "FAIL witness " << v.witness.str(b->matrix.torsion);
          failed.store(true);
        }
      }
      line << "\n";
      lines[i] = line.str();
    });
    for (const auto& l : lines) out << l;
    *report = dup_string(out.str());
    if (failed.load()) {
      g_last_error = "relation verification failed";
      return NICHOLS_ERR_VERIFY;
    }
    return NICHOLS_OK;
  });
}

nichols_status nichols_dot(const nichols_braiding* b, const nichols_options* opt, char** report) {
  (void)opt;
  if (!b || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    *report = dup_string(dynkin_dot(b->matrix));
    return NICHOLS_OK;
  });
}

nichols_status nichols_bosonize(const nichols_hopf* h, const nichols_options* opt, char** report) {
  (void)opt;
  if (!h || !report) {
    g_last_error = "null argument";
    return NICHOLS_ERR_ARG;
  }
  return guarded([&] {
    SuperHopfPresentation out = bosonize(h->presentation);
    *report = dup_string(out.serialize());
    return NICHOLS_OK;
  });
}

void nichols_string_free(char* s) { std::free(s); }

const char* nichols_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
