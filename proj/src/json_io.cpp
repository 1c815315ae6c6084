#include "qchan/json_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace qchan {

namespace {

using nlohmann::json;

double finite_number(const json& node, const std::string& where) {
  if (!node.is_number()) throw SchemaError(where + " must be a number");
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw SchemaError(where + " must be finite");
  return v;
}

Eigen::VectorXd number_array(const json& node, Eigen::Index size, const std::string& where) {
  if (!node.is_array() || static_cast<Eigen::Index>(node.size()) != size) {
    throw SchemaError(where + " must be an array of " + std::to_string(size) + " numbers");
  }
  Eigen::VectorXd out(size);
  for (Eigen::Index i = 0; i < size; ++i) out[i] = finite_number(node[i], where);
  return out;
}

Eigen::MatrixXd number_matrix(const json& node, Eigen::Index rows, Eigen::Index cols,
                              const std::string& where) {
  if (!node.is_array() || static_cast<Eigen::Index>(node.size()) != rows) {
    throw SchemaError(where + " must be a " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " matrix");
  }
  Eigen::MatrixXd out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    out.row(i) = number_array(node[i], cols, where + " row").transpose();
  }
  return out;
}

void require_keys(const json& doc, const std::set<std::string>& expected) {
  for (const auto& item : doc.items()) {
    if (!expected.contains(item.key())) {
      throw SchemaError("unexpected key \"" + item.key() + "\" in channel object");
    }
  }
  for (const std::string& key : expected) {
    if (!doc.contains(key)) {
      throw SchemaError("missing key \"" + key + "\" in channel object");
    }
  }
}

double strength_in_unit_interval(const json& doc) {
  const double x = finite_number(doc.at("x"), "\"x\"");
  if (x < 0.0 || x > 1.0) throw SchemaError("\"x\" must lie in [0, 1]");
  return x;
}

Channel kraus_from_json(const json& doc) {
  const json& re = doc.at("kraus_re");
  const json& im = doc.at("kraus_im");
  if (!re.is_array() || re.empty()) {
    throw SchemaError("\"kraus_re\" must be a nonempty array of matrices");
  }
  if (!im.is_array() || im.size() != re.size()) {
    throw SchemaError("\"kraus_im\" must match \"kraus_re\" in length");
  }
  if (!re[0].is_array() || re[0].empty()) {
    throw SchemaError("Kraus operators must be matrices");
  }
  const auto dim = static_cast<Eigen::Index>(re[0].size());
  std::vector<Matrix> ops;
  ops.reserve(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) {
    const std::string where = "Kraus operator " + std::to_string(k);
    const Eigen::MatrixXd real_part = number_matrix(re[k], dim, dim, where + " (re)");
    const Eigen::MatrixXd imag_part = number_matrix(im[k], dim, dim, where + " (im)");
    ops.push_back(real_part.cast<Complex>() + Complex(0, 1) * imag_part.cast<Complex>());
  }
  return KrausChannel(std::move(ops));
}

}  // namespace

Channel channel_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("channel document must be a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw SchemaError("channel object needs a string \"kind\"");
  }
  const std::string kind = doc.at("kind").get<std::string>();

  if (kind == "pauli") {
    require_keys(doc, {"kind", "c"});
    const Eigen::VectorXd c = number_array(doc.at("c"), 3, "\"c\"");
    return PauliChannel::from_distortion(Vector3(c[0], c[1], c[2]));
  }
  if (kind == "fano") {
    require_keys(doc, {"kind", "lambda", "l"});
    FanoForm fano;
    fano.distortion = number_matrix(doc.at("lambda"), 3, 3, "\"lambda\"");
    const Eigen::VectorXd l = number_array(doc.at("l"), 3, "\"l\"");
    fano.translation = Vector3(l[0], l[1], l[2]);
    choi_of(fano);  // rejects non-CP forms up front
    return fano;
  }
  if (kind == "kraus") {
    require_keys(doc, {"kind", "kraus_re", "kraus_im"});
    return kraus_from_json(doc);
  }
  if (kind == "identity") {
    require_keys(doc, {"kind"});
    return identity_channel();
  }
  if (kind == "phase_flip") {
    require_keys(doc, {"kind", "x"});
    return phase_flip(strength_in_unit_interval(doc));
  }
  if (kind == "depolarizing") {
    require_keys(doc, {"kind", "x"});
    return depolarizing(strength_in_unit_interval(doc));
  }
  throw SchemaError("unknown channel kind \"" + kind + "\"");
}

Channel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open channel file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw SchemaError("invalid JSON in " + path + ": " + err.what());
  }
  return channel_from_json(doc);
}

nlohmann::ordered_json channel_to_json(const Channel& channel) {
  nlohmann::ordered_json doc;
  if (const auto* mixture = std::get_if<PauliChannel>(&channel)) {
    doc["kind"] = "pauli";
    const Vector3& c = mixture->distortion_diagonal();
    doc["c"] = {c[0], c[1], c[2]};
    return doc;
  }
  if (const auto* fano = std::get_if<FanoForm>(&channel)) {
    doc["kind"] = "fano";
    nlohmann::ordered_json lambda = nlohmann::ordered_json::array();
    for (int i = 0; i < 3; ++i) {
      lambda.push_back({fano->distortion(i, 0), fano->distortion(i, 1), fano->distortion(i, 2)});
    }
    doc["lambda"] = std::move(lambda);
    doc["l"] = {fano->translation[0], fano->translation[1], fano->translation[2]};
    return doc;
  }
  const KrausChannel& kraus = std::get<KrausChannel>(channel);
  doc["kind"] = "kraus";
  nlohmann::ordered_json re = nlohmann::ordered_json::array();
  nlohmann::ordered_json im = nlohmann::ordered_json::array();
  for (const Matrix& op : kraus.ops()) {
    nlohmann::ordered_json op_re = nlohmann::ordered_json::array();
    nlohmann::ordered_json op_im = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < op.rows(); ++i) {
      nlohmann::ordered_json row_re = nlohmann::ordered_json::array();
      nlohmann::ordered_json row_im = nlohmann::ordered_json::array();
      for (Eigen::Index j = 0; j < op.cols(); ++j) {
        row_re.push_back(op(i, j).real());
        row_im.push_back(op(i, j).imag());
      }
      op_re.push_back(std::move(row_re));
      op_im.push_back(std::move(row_im));
    }
    re.push_back(std::move(op_re));
    im.push_back(std::move(op_im));
  }
  doc["kraus_re"] = std::move(re);
  doc["kraus_im"] = std::move(im);
  return doc;
}

}  // namespace qchan
