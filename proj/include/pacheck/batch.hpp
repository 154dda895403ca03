// Batch checking of proof-script corpora against every system profile.
// The acceptance matrix over a corpus directory is the executable form of the
// system lattice; entries are independent, so the OpenMP path fans the
// (script, profile) grid over threads while the serial path is kept as the
// reference.  Output order is by script name either way.

#ifndef PACHECK_BATCH_HPP
#define PACHECK_BATCH_HPP

#include <string>
#include <vector>

#include "pacheck/kernel.hpp"

namespace pacheck {

struct CorpusEntry {
  std::string name;  // file stem
  std::string path;
  ProofScript script;
};

struct MatrixRow {
  std::string name;
  std::vector<Verdict> verdicts;  // one per profile, in profile_names() order
};

std::vector<CorpusEntry> load_corpus(const std::string& dir);

std::vector<MatrixRow> check_corpus_serial(const std::vector<CorpusEntry>& corpus,
                                           const std::string& cert_dir);
std::vector<MatrixRow> check_corpus_omp(const std::vector<CorpusEntry>& corpus,
                                        const std::string& cert_dir);

// "name: ACCEPT REJECT ..." lines in profile order, sorted by name.
std::string format_matrix(const std::vector<MatrixRow>& rows);

// Accepted under a smaller profile but rejected under a componentwise-larger
// one; empty when the lattice behaves.
struct MonotonicityViolation {
  std::string script;
  std::string smaller;
  std::string larger;
};
std::vector<MonotonicityViolation> monotonicity_violations(
    const std::vector<MatrixRow>& rows);

}  // namespace pacheck

#endif
