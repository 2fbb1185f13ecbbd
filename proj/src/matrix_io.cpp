#include "skewlab/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace skewlab {
namespace {

Eigen::MatrixXd real_part_from_json(const nlohmann::json& j, const char* key,
                                    Eigen::Index dim) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ParseError(std::string("matrix JSON field '") + key +
                         "' missing or not an array");
    const auto& rows = j.at(key);
    if (static_cast<Eigen::Index>(rows.size()) != dim)
        throw ParseError(std::string("matrix JSON field '") + key + "' has " +
                         std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(dim));
    Eigen::MatrixXd out(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const auto& row = rows.at(static_cast<std::size_t>(r));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
            throw ParseError(std::string("matrix JSON field '") + key +
                             "' is ragged at row " + std::to_string(r));
        for (Eigen::Index c = 0; c < dim; ++c) {
            const auto& cell = row.at(static_cast<std::size_t>(c));
            if (!cell.is_number())
                throw ParseError(std::string("matrix JSON field '") + key +
                                 "' has a non-numeric entry");
            out(r, c) = cell.get<double>();
        }
    }
    return out;
}

} // namespace

CMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw ParseError("matrix JSON must be an object");
    if (!j.contains("dim") || !j.at("dim").is_number_integer())
        throw ParseError("matrix JSON field 'dim' missing or not an integer");
    const auto dim = j.at("dim").get<Eigen::Index>();
    if (dim < 1)
        throw ParseError("matrix JSON 'dim' must be positive");
    const Eigen::MatrixXd re = real_part_from_json(j, "re", dim);
    const Eigen::MatrixXd im = real_part_from_json(j, "im", dim);
    return re.cast<Cplx>() + Cplx(0.0, 1.0) * im.cast<Cplx>();
}

nlohmann::json matrix_to_json(const CMatrix& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

void save_matrix(const std::string& path, const CMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << matrix_to_json(m).dump(2) << '\n';
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    if (ec != std::errc())
        throw Error("number formatting failed");
    return std::string(buf, ptr);
}

} // namespace skewlab
