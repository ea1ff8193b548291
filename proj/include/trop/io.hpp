#pragma once

#include <string>

#include "trop/chroma.hpp"
#include "trop/universality.hpp"

namespace trop::io {

// JSON texts; rationals serialized as "p" / "p/q" strings.
std::string arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const std::string& text);

std::string points_to_json(const PointConfig& cfg);
PointConfig points_from_json(const std::string& text);

std::string subdivision_to_json(const NewtonSubdivision& sub);
NewtonSubdivision subdivision_from_json(const std::string& text);

std::string metric_to_json(const ExactMetric& d);
ExactMetric metric_from_json(const std::string& text);

std::string system_to_json(const LinearSystemSpec& sys);
LinearSystemSpec system_from_json(const std::string& text);

std::string certificate_to_json(const InfeasibilityCertificate& cert);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace trop::io
