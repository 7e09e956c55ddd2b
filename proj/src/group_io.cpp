#include "xmnlab/group_io.hpp"

#include <fstream>
#include <stdexcept>

namespace xmnlab {

Group group_from_json(const nlohmann::json& doc, std::size_t order_cap) {
  if (!doc.is_object()) throw std::invalid_argument("group description must be a JSON object");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer()) {
    throw std::invalid_argument("group description needs an integer \"degree\"");
  }
  const auto degree_value = doc["degree"].get<long long>();
  if (degree_value < 1) throw std::invalid_argument("group degree must be at least 1");
  const auto degree = static_cast<std::size_t>(degree_value);
  std::string name = doc.value("name", std::string("custom"));

  std::vector<Permutation> gens;
  if (doc.contains("generators")) {
    const auto& list = doc["generators"];
    if (!list.is_array()) throw std::invalid_argument("\"generators\" must be an array");
    for (const auto& entry : list) {
      if (entry.is_string()) {
        gens.push_back(Permutation::from_cycles(entry.get<std::string>(), degree));
      } else if (entry.is_array()) {
        std::vector<point_t> images;
        for (const auto& v : entry) {
          if (!v.is_number_unsigned()) {
            throw std::invalid_argument("image arrays must hold non-negative integers");
          }
          images.push_back(v.get<point_t>());
        }
        if (images.size() != degree) {
          throw std::invalid_argument("generator has " + std::to_string(images.size()) +
                                      " images but degree is " + std::to_string(degree));
        }
        gens.emplace_back(std::move(images));
      } else {
        throw std::invalid_argument("generator must be an image array or a cycle string");
      }
    }
  }
  if (gens.empty()) gens.emplace_back(degree);
  return group_from_generators(gens, std::move(name), order_cap);
}

Group load_group_file(const std::filesystem::path& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("group file " + path.string() + " is not valid JSON: " + e.what());
  }
  return group_from_json(doc, order_cap);
}

nlohmann::json group_to_json(const Group& group) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : group.generators()) {
    gens.push_back(std::vector<point_t>(g.images().begin(), g.images().end()));
  }
  return {{"name", group.name()}, {"degree", group.degree()}, {"generators", gens}};
}

}  // namespace xmnlab
