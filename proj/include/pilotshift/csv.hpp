#pragma once

#include <string>
#include <vector>

namespace pilotshift {

struct CcdfResult;
struct PowerSweepResult;
struct DetectionErrorResult;
struct SurfaceResult;
struct BerResult;

/// Shortest decimal form that parses back to the same double.
std::string format_number(double value);

/// Each file starts with `# pilotshift <command> <manifest>` followed by a
/// header row. Throws IoError naming the path when it cannot be written.
void write_csv(const CcdfResult& result, const std::string& path);
void write_csv(const PowerSweepResult& result, const std::string& path);
void write_csv(const DetectionErrorResult& result, const std::string& path);
void write_csv(const SurfaceResult& result, const std::string& path);
void write_csv(const BerResult& result, const std::string& path);

struct CsvTable {
    std::vector<std::string> comments;  // without the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

}  // namespace pilotshift
