#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "golayks/bases.hpp"
#include "golayks/codes.hpp"
#include "golayks/kscheck.hpp"
#include "golayks/rays.hpp"

namespace golayks::io {

/// Generator-matrix text format: `field <q> length <N> dim <k>` followed
/// by k rows of N space-separated digits. `-1` is accepted for 2 on input.
std::string matrix_to_text(const GeneratorMatrix& G);
GeneratorMatrix matrix_from_text(std::istream& in, const std::string& name);
GeneratorMatrix matrix_from_file(const std::filesystem::path& path);
void matrix_to_file(const GeneratorMatrix& G, const std::filesystem::path& path);

/// Rays CSV: header `label,dim,entries`, entries as signed digits joined
/// by spaces, rows sorted by label.
std::string rays_to_csv(const RaySystem& rs);
void rays_to_file(const RaySystem& rs, const std::filesystem::path& path);

std::string bases_to_json(const BasisSystem& bs);
void bases_to_file(const BasisSystem& bs, const std::filesystem::path& path);
BasisSystem bases_from_file(const std::filesystem::path& path);

std::string certificate_to_json(const KSCertificate& cert);
void certificate_to_file(const KSCertificate& cert, const std::filesystem::path& path);

/// Three-column human-readable summary (code, rays-bases symbol, equation).
std::string certificate_summary(const KSCertificate& cert);

std::string pipeline_to_json(const PipelineReport& rep);
void pipeline_to_file(const PipelineReport& rep, const std::filesystem::path& path);

}  // namespace golayks::io
