#include "pacheck/batch.hpp"

#include <algorithm>
#include <filesystem>

namespace pacheck {

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<CorpusEntry> out;
  if (!fs::is_directory(dir)) throw Error("corpus directory not found: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".prf") continue;
    CorpusEntry c;
    c.name = entry.path().stem().string();
    c.path = entry.path().string();
    c.script = load_script(c.path);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.name < b.name; });
  if (out.empty()) throw Error("corpus directory has no .prf scripts: " + dir);
  return out;
}

std::vector<MatrixRow> check_corpus_serial(const std::vector<CorpusEntry>& corpus,
                                           const std::string& cert_dir) {
  CheckOptions opts;
  opts.cert_dir = cert_dir;
  const auto& names = profile_names();
  std::vector<MatrixRow> rows(corpus.size());
  for (std::size_t s = 0; s < corpus.size(); s++) {
    rows[s].name = corpus[s].name;
    rows[s].verdicts.resize(names.size());
    for (std::size_t p = 0; p < names.size(); p++)
      rows[s].verdicts[p] = check_proof(corpus[s].script, system_profile(names[p]), opts);
  }
  return rows;
}

std::vector<MatrixRow> check_corpus_omp(const std::vector<CorpusEntry>& corpus,
                                        const std::string& cert_dir) {
  CheckOptions opts;
  opts.cert_dir = cert_dir;
  const auto& names = profile_names();
  std::vector<MatrixRow> rows(corpus.size());
  for (std::size_t s = 0; s < corpus.size(); s++) {
    rows[s].name = corpus[s].name;
    rows[s].verdicts.resize(names.size());
  }
  const long total = static_cast<long>(corpus.size() * names.size());
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < total; k++) {
    const std::size_t s = static_cast<std::size_t>(k) / names.size();
    const std::size_t p = static_cast<std::size_t>(k) % names.size();
    try {
      rows[s].verdicts[p] = check_proof(corpus[s].script, system_profile(names[p]), opts);
    } catch (...) {
#pragma omp critical
      err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return rows;
}

std::string format_matrix(const std::vector<MatrixRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out += row.name + ":";
    for (const Verdict& v : row.verdicts) out += v.accepted ? " ACCEPT" : " REJECT";
    out += "\n";
  }
  return out;
}

std::vector<MonotonicityViolation> monotonicity_violations(
    const std::vector<MatrixRow>& rows) {
  const auto& names = profile_names();
  std::vector<MonotonicityViolation> out;
  for (std::size_t a = 0; a < names.size(); a++) {
    for (std::size_t b = 0; b < names.size(); b++) {
      if (a == b) continue;
      if (!profile_leq(system_profile(names[a]), system_profile(names[b]))) continue;
      for (const auto& row : rows) {
        if (row.verdicts[a].accepted && !row.verdicts[b].accepted)
          out.push_back({row.name, names[a], names[b]});
      }
    }
  }
  return out;
}

}  // namespace pacheck
