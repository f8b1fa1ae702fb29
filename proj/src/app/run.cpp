#include "run.hpp"

#include "wcm/arithlocal.hpp"
#include "wcm/exact/linalg.hpp"
#include "wcm/genericity.hpp"
#include "wcm/spectra.hpp"
#include "wcm/weakcomm.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace wcm::app {

namespace {

using genericity::GenericityCertificate;
using rootsys::RootSystemType;
using weakcomm::GroupDescriptor;
using weakcomm::SemisimpleElement;

struct Options {
  int exponentBound = 10;
  std::uint64_t primeBudget = 1000;
  int wordLength = 3;
  int precisionBits = 64;
  std::optional<std::uint64_t> seed;

  json toJson() const {
    json o{{"exponentBound", exponentBound},
           {"primeBudget", std::to_string(primeBudget)},
           {"wordLength", wordLength},
           {"precisionBits", precisionBits}};
    if (seed) o["seed"] = std::to_string(*seed);
    return o;
  }
};

// Errors that mean the input itself is unacceptable, as opposed to a
// computation running out of room.
bool isResourceError(ErrorKind k) {
  return k == ErrorKind::PrecisionExhausted || k == ErrorKind::DegreeTooLarge || k == ErrorKind::BudgetExhausted;
}

struct Context {
  const Document& doc;
  Options opt;
  json notes = json::array();
  std::ostringstream text;
  bool color = false;

  std::string yesNo(bool v) const {
    if (!color) return v ? "yes" : "no";
    return v ? "\033[32myes\033[0m" : "\033[31mno\033[0m";
  }

  // Runs f, turning library precondition failures into a validation error at ptr.
  template <class F>
  auto guarded(const std::string& ptr, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      if (isResourceError(e.kind())) throw;
      doc.fail(ptr, e.what());
    }
  }

  RootSystemType rootType(const std::string& ptr) {
    doc.onlyKeys(ptr, {"family", "rank"});
    return guarded(ptr, [&] {
      return RootSystemType(rootsys::parseFamily(doc.string(ptr + "/family")), static_cast<int>(doc.integer(ptr + "/rank", 1, 64)));
    });
  }

  GroupDescriptor group(const std::string& ptr) {
    doc.onlyKeys(ptr, {"kind", "dimension", "form"});
    const std::string kind = doc.string(ptr + "/kind");
    if (kind == "SL") return GroupDescriptor::SL(static_cast<int>(doc.integer(ptr + "/dimension", 2, 12)));
    if (kind == "Sp") {
      const long d = doc.integer(ptr + "/dimension", 2, 12);
      if (d % 2) doc.fail(ptr + "/dimension", "Sp needs an even dimension");
      return GroupDescriptor::Sp(static_cast<int>(d));
    }
    if (kind == "SO") {
      const auto q = doc.rationals(ptr + "/form");
      if (q.size() < 3 || q.size() > 12) doc.fail(ptr + "/form", "SO needs a form of dimension 3..12");
      VectorQ v(static_cast<Eigen::Index>(q.size()));
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) doc.fail(ptr + "/form/" + std::to_string(i), "degenerate form");
        v[static_cast<Eigen::Index>(i)] = q[i];
      }
      return GroupDescriptor::SO(v);
    }
    doc.fail(ptr + "/kind", "group kind must be SL, Sp or SO");
  }

  std::vector<SemisimpleElement> elements(const std::string& ptr, const GroupDescriptor& g) {
    std::vector<SemisimpleElement> out;
    for (std::size_t i = 0; i < doc.arraySize(ptr); ++i) {
      const std::string p = ptr + "/" + std::to_string(i);
      const MatrixQ m = doc.matrix(p);
      out.push_back(guarded(p, [&] { return SemisimpleElement(m, g); }));
    }
    return out;
  }

  std::vector<MatrixQ> matrices(const std::string& ptr) {
    std::vector<MatrixQ> out;
    for (std::size_t i = 0; i < doc.arraySize(ptr); ++i) out.push_back(doc.matrix(ptr + "/" + std::to_string(i)));
    return out;
  }

  std::uint64_t requireSeed(const std::string& ptr) {
    if (!opt.seed) doc.fail(ptr, "a seed is required for this stochastic task (options.seed or --seed)");
    return *opt.seed;
  }
};

// Human-readable form of an enclosure; the structured report keeps the exact ends.
std::string decimal(const exact::Interval& x) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g (+- %.1e)", x.mid().convert_to<double>(), (x.width() / 2).convert_to<double>());
  return buf;
}

std::string wordString(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += " ";
    s += "g" + std::to_string(word[i] / 2) + (word[i] % 2 ? "^-1" : "");
  }
  return s;
}

json witnessJson(const weakcomm::Witness& w) {
  json blocks = json::array();
  for (const auto& b : w.exponents) {
    json row = json::array();
    for (const auto& e : b) row.push_back(e.str());
    blocks.push_back(row);
  }
  return {{"exponents", blocks}, {"value", toJson(w.value)}};
}

json certificateJson(const GenericityCertificate& c) {
  json witnessed = json::array(), evidence = json::array();
  for (const auto& w : c.witnessed) witnessed.push_back(w.str());
  for (const auto& e : c.evidence) evidence.push_back({{"prime", std::to_string(e.prime)}, {"class", e.pattern.str()}});
  return {{"status", genericity::toString(c.status)},
          {"type", c.type.name()},
          {"witnessed", witnessed},
          {"classCount", rootsys::conjugacyClasses(c.type).size()},
          {"evidence", evidence},
          {"primesExamined", c.primesUsed.size()},
          {"largestPrime", c.primesUsed.empty() ? "0" : std::to_string(c.primesUsed.back())},
          {"upToVeryEvenCollapse", c.upToVeryEvenCollapse}};
}

// --- tasks -----------------------------------------------------------------

json runRootinfo(Context& cx) {
  cx.doc.onlyKeys("/payload", {"family", "rank"});
  const RootSystemType type = cx.rootType("/payload");
  json r{{"type", type.name()},
         {"rank", type.rank},
         {"weylOrder", rootsys::weylOrder(type).str()},
         {"minusOneInWeyl", rootsys::minusOneInWeyl(type)},
         {"simplyLaced", rootsys::simplyLaced(type.family)}};
  const std::string lr = rootsys::longRootSubgroupType(type);
  if (!lr.empty()) r["longRootSubgroup"] = lr;
  cx.text << type.name() << ": |W| = " << rootsys::weylOrder(type).str()
          << ", -1 in W: " << cx.yesNo(rootsys::minusOneInWeyl(type)) << "\n";
  if (type.classical()) {
    json classes = json::array();
    for (const auto& c : rootsys::conjugacyClasses(type)) classes.push_back(c.str());
    r["rootCount"] = rootsys::roots(type).size();
    r["conjugacyClasses"] = classes;
    r["classCount"] = classes.size();
    r["collapsedClassCount"] = rootsys::collapsedClassCount(type);
    r["casimirConstant"] = toJson(rootsys::casimirConstant(type));
    cx.text << "roots: " << rootsys::roots(type).size() << ", conjugacy classes: " << classes.size() << "\n";
  } else {
    cx.notes.push_back("exceptional types carry metadata only");
  }
  return r;
}

json runWeakcomm(Context& cx) {
  cx.doc.onlyKeys("/payload", {"group", "first", "second"});
  const GroupDescriptor g = cx.group("/payload/group");
  const auto s1 = cx.elements("/payload/first", g), s2 = cx.elements("/payload/second", g);
  if (s1.empty() || s2.empty()) cx.doc.fail("/payload", "both samples must be nonempty");
  const int bound = cx.opt.exponentBound;
  const auto rep = cx.guarded("/payload", [&] { return weakcomm::weaklyCommensurableSamples(s1, s2, bound); });
  json pairs = json::array();
  for (std::size_t i = 0; i < s1.size(); ++i)
    for (std::size_t j = 0; j < s2.size(); ++j) {
      json p{{"first", i}, {"second", j}};
      const auto& v = rep.verdicts[i][j];
      if (!v) {
        p["verdict"] = "FiniteOrder";
      } else if (v->yes) {
        p["verdict"] = "Yes";
        p["witness"] = witnessJson(*v->witness);
      } else {
        p["verdict"] = "NoUpToBound";
      }
      cx.text << "S1[" << i << "] ~ S2[" << j << "]: " << p["verdict"].get<std::string>() << "\n";
      pairs.push_back(p);
    }
  json r{{"bound", bound},
         {"group", g.name()},
         {"pairs", pairs},
         {"firstFinite", rep.firstFinite},
         {"secondFinite", rep.secondFinite},
         {"firstCovered", rep.firstCovered},
         {"secondCovered", rep.secondCovered},
         {"aggregate", rep.aggregate()}};
  cx.text << "aggregate: " << cx.yesNo(rep.aggregate()) << " (exponent bound " << bound << ")\n";
  cx.notes.push_back("verdicts concern the finite samples given, not the groups they generate");
  return r;
}

json runGeneric(Context& cx) {
  cx.doc.onlyKeys("/payload", {"group", "elements", "polynomials", "randomWalk", "sieve"});
  const auto& payload = cx.doc.get("/payload");
  if (!payload.contains("elements") && !payload.contains("polynomials") && !payload.contains("randomWalk") &&
      !payload.contains("sieve"))
    cx.doc.fail("/payload", "nothing to do: give elements, polynomials, randomWalk or sieve");
  const std::uint64_t budget = cx.opt.primeBudget;
  json r{{"primeBudget", std::to_string(budget)}};
  std::optional<GroupDescriptor> g;
  if (payload.contains("group")) g = cx.group("/payload/group");
  if (payload.contains("elements")) {
    if (!g) cx.doc.fail("/payload", "elements need a group");
    json out = json::array();
    const auto es = cx.elements("/payload/elements", *g);
    for (std::size_t i = 0; i < es.size(); ++i) {
      const auto cert = cx.guarded("/payload/elements/" + std::to_string(i), [&] { return genericity::isGenericElement(es[i], budget); });
      cx.text << "element " << i << ": " << genericity::toString(cert.status) << "\n";
      out.push_back(certificateJson(cert));
    }
    r["elements"] = out;
  }
  if (payload.contains("polynomials")) {
    json out = json::array();
    for (std::size_t i = 0; i < cx.doc.arraySize("/payload/polynomials"); ++i) {
      const std::string p = "/payload/polynomials/" + std::to_string(i);
      cx.doc.onlyKeys(p, {"coefficients", "type"});
      const auto f = cx.doc.poly(p + "/coefficients");
      const auto type = cx.rootType(p + "/type");
      const auto cert = cx.guarded(p, [&] { return genericity::certifyGenericPoly(f, type, budget); });
      cx.text << "polynomial " << f.str() << " as " << type.name() << ": " << genericity::toString(cert.status) << "\n";
      out.push_back(certificateJson(cert));
    }
    r["polynomials"] = out;
  }
  if (payload.contains("randomWalk")) {
    const std::string p = "/payload/randomWalk";
    cx.doc.onlyKeys(p, {"generators", "length", "count"});
    if (!g) cx.doc.fail("/payload", "a random walk needs a group");
    const std::uint64_t seed = cx.requireSeed(p);
    const auto gens = cx.matrices(p + "/generators");
    if (gens.empty()) cx.doc.fail(p + "/generators", "no generators");
    const int length = static_cast<int>(cx.doc.integer(p + "/length", 0, 64));
    const int count = static_cast<int>(cx.doc.integer(p + "/count", 1, 10000));
    const auto walk = cx.guarded(p, [&] { return genericity::randomWalkSample(gens, *g, length, count, seed, budget); });
    json entries = json::array();
    for (const auto& e : walk.entries)
      entries.push_back({{"word", e.word}, {"status", genericity::toString(e.status)}});
    r["randomWalk"] = {{"entries", entries}, {"genericProportion", toJson(walk.genericProportion)}};
    cx.text << "random walk: generic proportion " << toString(walk.genericProportion) << " of " << count << "\n";
  }
  if (payload.contains("sieve")) {
    const std::string p = "/payload/sieve";
    const std::uint64_t seed = cx.requireSeed(p);
    const auto type = cx.rootType(p);
    const auto sieve = cx.guarded(p, [&] { return genericity::buildSieve(type, budget, seed); });
    json cons = json::array();
    for (const auto& [prime, c] : sieve.constraints) cons.push_back({{"prime", std::to_string(prime)}, {"class", c.str()}});
    r["sieve"] = {{"type", type.name()}, {"constraints", cons}, {"example", toJson(sieve.example)}};
    cx.text << "sieve for " << type.name() << ": " << sieve.constraints.size() << " constraints, example "
            << sieve.example.str() << "\n";
  }
  return r;
}

json runSpectrum(Context& cx) {
  cx.doc.onlyKeys("/payload", {"generators", "compareWith", "lambda", "bcScaling"});
  const auto& payload = cx.doc.get("/payload");
  const int bits = cx.opt.precisionBits;
  json r;
  auto spectrum = [&](const std::string& ptr) {
    const auto gens = cx.matrices(ptr);
    if (gens.empty()) cx.doc.fail(ptr, "no generators");
    return cx.guarded(ptr, [&] { return spectra::rationalLengthSpectrum(gens, cx.opt.wordLength, bits); });
  };
  auto sampleJson = [&](const spectra::SpectrumSample& s) {
    json entries = json::array();
    for (const auto& e : s.entries)
      entries.push_back({{"word", e.word}, {"t", toJson(e.length.t)}, {"length", toJson(e.length.numeric)},
                         {"windingDivisor", e.length.windingDivisor}});
    return entries;
  };
  if (payload.contains("generators")) {
    const auto s1 = spectrum("/payload/generators");
    r["spectrum"] = sampleJson(s1);
    cx.text << "spectrum: " << s1.entries.size() << " distinct lengths up to word length " << cx.opt.wordLength << "\n";
    for (const auto& e : s1.entries)
      cx.text << "  " << wordString(e.word) << ": t root of " << e.length.t.minpoly().str() << ", length "
              << decimal(e.length.numeric) << "\n";
    if (payload.contains("compareWith")) {
      const auto s2 = spectrum("/payload/compareWith");
      r["compareSpectrum"] = sampleJson(s2);
      if (s1.entries.empty() || s2.entries.empty()) {
        r["comparison"] = {{"aggregate", false}, {"table", json::array()}};
        cx.notes.push_back("a sample without hyperbolic elements is never length-commensurable");
      } else {
        const auto cmp = spectra::lengthCommensurableSamples(s1, s2, cx.opt.exponentBound);
        json table = json::array();
        for (const auto& row : cmp.table) {
          json jr = json::array();
          for (const auto& v : row)
            jr.push_back(v ? json{{"m", v->m}, {"n", v->n}, {"lengthRatio", toJson(v->lengthRatio)}} : json(nullptr));
          table.push_back(jr);
        }
        r["comparison"] = {{"aggregate", cmp.aggregate}, {"table", table}};
        cx.text << "length-commensurable samples: " << cx.yesNo(cmp.aggregate) << "\n";
      }
    }
  } else if (payload.contains("compareWith")) {
    cx.doc.fail("/payload/compareWith", "compareWith needs generators");
  }
  if (payload.contains("lambda")) {
    json out = json::array();
    for (std::size_t i = 0; i < cx.doc.arraySize("/payload/lambda"); ++i) {
      const std::string p = "/payload/lambda/" + std::to_string(i);
      cx.doc.onlyKeys(p, {"type", "eigenvalues"});
      const auto type = cx.rootType(p + "/type");
      std::vector<exact::AlgebraicNumber> eig;
      for (const auto& q : cx.doc.rationals(p + "/eigenvalues")) eig.emplace_back(q);
      const auto l = cx.guarded(p, [&] { return spectra::lambdaGamma(spectra::SplitTorusElement(type, eig), bits); });
      json entry{{"type", type.name()}, {"lambdaSquared", toJson(l.value)}};
      if (l.form) {
        json bases = json::array(), form = json::array();
        for (const auto& b : l.bases) bases.push_back(b.str());
        for (Eigen::Index a = 0; a < l.form->rows(); ++a) {
          json row = json::array();
          for (Eigen::Index b = 0; b < l.form->cols(); ++b) row.push_back(toJson((*l.form)(a, b)));
          form.push_back(row);
        }
        entry["logBases"] = bases;
        entry["form"] = form;
      }
      cx.text << "lambda^2 (" << type.name() << ") = " << decimal(l.value) << "\n";
      out.push_back(entry);
    }
    r["lambda"] = out;
  }
  if (payload.contains("bcScaling")) {
    json out = json::array();
    for (std::size_t i = 0; i < cx.doc.arraySize("/payload/bcScaling"); ++i) {
      const std::string p = "/payload/bcScaling/" + std::to_string(i);
      cx.doc.onlyKeys(p, {"rank", "x"});
      const int n = static_cast<int>(cx.doc.integer(p + "/rank", 2, 64));
      const auto xs = cx.doc.rationals(p + "/x");
      VectorQ x(static_cast<Eigen::Index>(xs.size()));
      for (std::size_t k = 0; k < xs.size(); ++k) x[static_cast<Eigen::Index>(k)] = xs[k];
      const Rational ratio = cx.guarded(p, [&] { return spectra::bcScalingCheck(n, x); });
      out.push_back({{"rank", n}, {"ratio", toJson(ratio)}, {"expected", toJson(Rational(2 * n + 2, 2 * n - 1))}});
      cx.text << "B/C scaling at n = " << n << ": " << toString(ratio) << "\n";
    }
    r["bcScaling"] = out;
  }
  if (r.is_null()) cx.doc.fail("/payload", "nothing to do: give generators, lambda or bcScaling");
  cx.notes.push_back("lengths are merged by exact t; distinct classes sharing t are counted once");
  return r;
}

// Congruence diagonalization of a symmetric rational matrix.
std::vector<Rational> diagonalize(MatrixQ a) {
  const Eigen::Index n = a.rows();
  std::vector<Rational> out;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        a.row(k).swap(a.row(j));
        a.col(k).swap(a.col(j));
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw Error(ErrorKind::InvalidArgument, "degenerate symmetric matrix");
        a.row(k) += a.row(j);
        a.col(k) += a.col(j);
      }
    }
    const Rational pivot = a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const Rational f = a(i, k) / pivot;
      if (f == 0) continue;
      a.row(i) -= f * a.row(k);
      a.col(i) -= f * a.col(k);
    }
    out.push_back(pivot);
  }
  return out;
}

json runTwins(Context& cx) {
  cx.doc.onlyKeys("/payload", {"form", "matrix", "quaternion", "hermitianDefiniteAtInfinity", "torus"});
  const auto& payload = cx.doc.get("/payload");
  arithlocal::QuadraticForm q;
  json r;
  if (payload.contains("form") == payload.contains("matrix")) cx.doc.fail("/payload", "give exactly one of form, matrix");
  if (payload.contains("form")) {
    q.diag = cx.doc.rationals("/payload/form");
  } else {
    const MatrixQ m = cx.doc.matrix("/payload/matrix");
    if (m != m.transpose()) cx.doc.fail("/payload/matrix", "matrix must be symmetric");
    q.diag = cx.guarded("/payload/matrix", [&] { return diagonalize(m); });
    json d = json::array();
    for (const auto& x : q.diag) d.push_back(toJson(x));
    r["diagonal"] = d;
  }
  if (cx.doc.arraySize("/payload/quaternion") != 2) cx.doc.fail("/payload/quaternion", "expected [a, b]");
  const arithlocal::QuaternionAlgebra h{cx.doc.rational("/payload/quaternion/0"), cx.doc.rational("/payload/quaternion/1")};
  const bool flag = cx.doc.boolean("/payload/hermitianDefiniteAtInfinity");
  const auto v = cx.guarded("/payload", [&] { return arithlocal::twins(q, h, flag); });
  json table = json::array();
  cx.text << "place  witt  (a,b)  B-split  C-split  agree\n";
  for (const auto& row : v.table) {
    table.push_back({{"place", row.place.str()},
                     {"wittIndex", row.wittIndex},
                     {"hilbert", row.hilbert},
                     {"bSplit", row.bSplit},
                     {"bAnisotropic", row.bAnisotropic},
                     {"cSplit", row.cSplit},
                     {"cAnisotropic", row.cAnisotropic},
                     {"agree", row.agree}});
    cx.text << std::left << std::setw(7) << row.place.str() << std::setw(6) << row.wittIndex << std::setw(7)
            << row.hilbert << std::setw(9) << (row.bSplit ? "yes" : "no") << std::setw(9) << (row.cSplit ? "yes" : "no")
            << cx.yesNo(row.agree) << "\n";
  }
  r["twins"] = v.twins;
  r["n"] = v.n;
  r["table"] = table;
  cx.text << "twins: " << cx.yesNo(v.twins) << "\n";
  if (payload.contains("torus")) {
    const auto f = cx.doc.poly("/payload/torus");
    const auto b = cx.guarded("/payload/torus", [&] { return arithlocal::bcTorusCorrespondence(f); });
    r["torus"] = {{"cSide", toJson(f)},
                  {"bSide", toJson(b)},
                  {"fixedDimensionC", arithlocal::fixedDimension(f)},
                  {"fixedDimensionB", arithlocal::fixedDimension(b)}};
    cx.text << "torus: " << f.str() << " -> " << b.str() << "\n";
  }
  cx.notes.push_back("the C side is SU_n over the quaternion algebra, definite at the real place only via the flag");
  return r;
}

json runDichotomy(Context& cx) {
  cx.doc.onlyKeys("/payload", {"g", "x", "type", "prime"});
  const MatrixQ g = cx.doc.matrix("/payload/g"), x = cx.doc.matrix("/payload/x");
  if (g.rows() != x.rows()) cx.doc.fail("/payload/x", "g and x differ in size");
  const auto type = cx.rootType("/payload/type");
  const std::uint64_t p = cx.doc.has("/payload/prime") ? cx.doc.unsigned64("/payload/prime") : 5;
  try {
    const auto rep = genericity::dichotomyCheck(g, x, type, p, cx.opt.primeBudget);
    json r{{"type", rep.type.name()}, {"simplyLaced", rep.simplyLaced}, {"conclusion", rep.conclusion}};
    if (!rep.longRootSubgroup.empty()) r["longRootSubgroup"] = rep.longRootSubgroup;
    if (rep.corroboration)
      r["corroboration"] = {{"prime", std::to_string(p)},
                            {"generates", rep.corroboration->generates},
                            {"closureOrder", std::to_string(rep.corroboration->closureOrder)},
                            {"groupOrder", std::to_string(rep.corroboration->groupOrder)}};
    cx.text << "closure of <g, x>: " << rep.conclusion << "\n";
    if (rep.corroboration)
      cx.text << "mod " << p << ": closure order " << rep.corroboration->closureOrder << " of "
              << rep.corroboration->groupOrder << "\n";
    return r;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::HypothesisViolated) {
      if (isResourceError(e.kind())) throw;
      cx.doc.fail("/payload", e.what());
    }
    cx.text << "hypothesis violated: " << e.what() << "\n";
    return {{"type", type.name()}, {"conclusion", "HypothesisViolated"}, {"reason", e.what()}};
  }
}

}  // namespace

std::string sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return out.str();
}

std::string serialize(const json& report) { return report.dump(2) + "\n"; }

RunResult runProblem(const std::string& fileText, const RunFlags& flags, bool color) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  try {
    const Document doc(fileText);
    if (!doc.root().is_object()) doc.fail("", "a problem file is a JSON object");
    doc.onlyKeys("", {"version", "task", "payload", "options"});
    const long version = doc.integer("/version", 0, 1000);
    if (version != 1) doc.fail("/version", "unsupported version " + std::to_string(version) + " (expected 1)");
    const std::string task = doc.string("/task");
    doc.get("/payload");

    Context cx{doc, {}, json::array(), {}, color};
    if (doc.has("/options")) {
      doc.onlyKeys("/options", {"exponentBound", "primeBudget", "wordLength", "precisionBits", "seed"});
      if (doc.has("/options/exponentBound")) cx.opt.exponentBound = static_cast<int>(doc.integer("/options/exponentBound", 1, 1000));
      if (doc.has("/options/primeBudget")) cx.opt.primeBudget = doc.unsigned64("/options/primeBudget");
      if (doc.has("/options/wordLength")) cx.opt.wordLength = static_cast<int>(doc.integer("/options/wordLength", 0, 12));
      if (doc.has("/options/precisionBits")) cx.opt.precisionBits = static_cast<int>(doc.integer("/options/precisionBits", 16, 4096));
      if (doc.has("/options/seed")) cx.opt.seed = doc.unsigned64("/options/seed");
    }
    if (flags.exponentBound) cx.opt.exponentBound = *flags.exponentBound;
    if (flags.primeBudget) cx.opt.primeBudget = *flags.primeBudget;
    if (flags.wordLength) cx.opt.wordLength = *flags.wordLength;
    if (flags.precisionBits) cx.opt.precisionBits = *flags.precisionBits;
    if (flags.seed) cx.opt.seed = flags.seed;
    if (cx.opt.primeBudget < 2 || cx.opt.primeBudget > 100'000'000)
      doc.fail("/options/primeBudget", "prime budget must lie in [2, 1e8]");

    json body;
    if (task == "rootinfo")
      body = runRootinfo(cx);
    else if (task == "weakcomm")
      body = runWeakcomm(cx);
    else if (task == "generic")
      body = runGeneric(cx);
    else if (task == "spectrum")
      body = runSpectrum(cx);
    else if (task == "twins")
      body = runTwins(cx);
    else if (task == "dichotomy")
      body = runDichotomy(cx);
    else
      doc.fail("/task", "unknown task '" + task + "'");

    result.report = {{"toolVersion", kToolVersion}, {"inputHash", sha256Hex(fileText)}, {"task", task},
                     {"options", cx.opt.toJson()}, {"result", body}, {"notes", cx.notes}};
    if (flags.timings) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
      result.report["timings"] = {{"totalMs", ms.count()}};
    }
    result.text = "task " + task + "\n" + cx.text.str();
    result.exitCode = 0;
  } catch (const ValidationError& e) {
    result.exitCode = 2;
    result.text = e.what();
  } catch (const Error& e) {
    result.exitCode = 3;
    result.text = std::string("analysis could not finish: ") + e.what();
  }
  return result;
}

}  // namespace wcm::app
