#pragma once
// CSV and plain-text report emission.  CSV bodies carry no timestamps so a
// fixed config reproduces them byte for byte; the report header line holds
// the timestamp plus the cutoff provenance, making constants comparable
// across runs.

#include <ctime>
#include <fstream>
#include <string>
#include <vector>

#include "torus/bump.hpp"
#include "torus/version.hpp"

namespace torus {

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& header) : out_(path) {
        if (!out_) throw config_error("cannot open CSV output: " + path);
        out_ << header << '\n';
    }
    void row(const std::string& line) { out_ << line << '\n'; }

  private:
    std::ofstream out_;
};

class ReportWriter {
  public:
    explicit ReportWriter(const std::string& path) : out_(path) {
        if (!out_) throw config_error("cannot open report output: " + path);
        std::time_t now = std::time(nullptr);
        char stamp[64];
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        out_ << "# torus-leibniz " << version_string() << "  cutoffs=" << bump_provenance()
             << "  generated=" << stamp << '\n';
    }
    void line(const std::string& text) { out_ << text << '\n'; }

  private:
    std::ofstream out_;
};

class PlotWriter {
  public:
    explicit PlotWriter(const std::string& path) : out_(path) {
        if (!out_) throw config_error("cannot open plotdata output: " + path);
    }
    void point(double x, double y) { out_ << fmt(x) << ' ' << fmt(y) << '\n'; }
    void comment(const std::string& text) { out_ << "# " << text << '\n'; }

  private:
    std::ofstream out_;
};

}  // namespace torus
