#ifndef CASIMIR_CACHE_HPP
#define CASIMIR_CACHE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "casimir/core.hpp"

namespace casimir {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheHeader =
    "schema_version,x,model,ell_max,m_max,phi,rho,beta,conv_est,status";

struct CacheRecord {
    int schema_version = kCacheSchemaVersion;
    double x = 0;
    MirrorModel model = MirrorModel::Drude;
    long ell_max = 0;
    int m_max = 0;
    double phi = 0;
    double rho = 0;
    double beta = 0;
    double conv_est = 0;
    std::string status = "ok";
};

std::string to_csv_row(const CacheRecord& r);

// Parses one data row; returns nullopt for malformed lines.
std::optional<CacheRecord> parse_csv_row(const std::string& line);

// Append-only CSV result cache with an advisory exclusive lock held for the
// lifetime of the object. Corrupt trailing lines are skipped with a warning
// on stderr. A second process opening the same cache is an error.
class ResultCache {
  public:
    explicit ResultCache(std::string path);
    ~ResultCache();

    ResultCache(const ResultCache&) = delete;
    ResultCache& operator=(const ResultCache&) = delete;

    // Key: (x formatted at full precision, model). A record hits only when
    // its conv_est meets the requested refine_tol and its status is ok.
    const CacheRecord* lookup(double x, MirrorModel model, double refine_tol) const;

    void append(const CacheRecord& r);

    std::size_t size() const { return records_.size(); }

  private:
    std::string path_;
    int fd_ = -1;
    std::map<std::pair<std::string, std::string>, CacheRecord> records_;
};

class cache_locked_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace casimir

#endif
