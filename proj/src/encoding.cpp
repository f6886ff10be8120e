#include "latfold/encoding.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace latfold {

const char* encoding_kind_name(EncodingKind k) {
  switch (k) {
    case EncodingKind::TurnAncilla: return "turn-ancilla";
    case EncodingKind::TurnCircuit: return "turn-circuit";
    case EncodingKind::Diamond: return "diamond";
  }
  return "?";
}

EncodingKind encoding_kind_from_name(const std::string& name) {
  if (name == "turn-ancilla") return EncodingKind::TurnAncilla;
  if (name == "turn-circuit") return EncodingKind::TurnCircuit;
  if (name == "diamond") return EncodingKind::Diamond;
  throw std::invalid_argument("unknown encoding: " + name);
}

namespace {

const char* role_name(VarRole r) {
  switch (r) {
    case VarRole::Info: return "info";
    case VarRole::Slack: return "slack";
    case VarRole::Omega: return "omega";
    case VarRole::DiamondSite: return "site";
    case VarRole::Gadget: return "gadget";
  }
  return "?";
}

VarRole role_from_name(const std::string& name) {
  if (name == "info") return VarRole::Info;
  if (name == "slack") return VarRole::Slack;
  if (name == "omega") return VarRole::Omega;
  if (name == "site") return VarRole::DiamondSite;
  if (name == "gadget") return VarRole::Gadget;
  throw std::invalid_argument("unknown variable role: " + name);
}

}  // namespace

std::string layout_to_json(const Encoding& enc) {
  nlohmann::ordered_json doc;
  doc["encoding"] = encoding_kind_name(enc.kind);
  doc["chain_length"] = enc.chain_length;
  doc["nvars"] = enc.num_vars;
  doc["info_bits"] = enc.num_info_bits;
  if (enc.constant.denominator() != 1) throw std::invalid_argument("layout constant must be integral");
  doc["constant"] = boost::rational_cast<long long>(enc.constant);
  auto vars = nlohmann::ordered_json::array();
  for (int v = 1; v <= enc.num_vars; ++v) {
    const VarInfo& info = enc.vars[v];
    nlohmann::ordered_json entry;
    entry["var"] = v;
    entry["role"] = role_name(info.role);
    switch (info.role) {
      case VarRole::Info: break;
      case VarRole::Slack:
        entry["pair"] = {info.i, info.j};
        entry["bit"] = info.k;
        break;
      case VarRole::Omega:
      case VarRole::Gadget:
        entry["pair"] = {info.i, info.j};
        break;
      case VarRole::DiamondSite:
        entry["amino"] = info.i;
        entry["point"] = {info.x, info.y};
        break;
    }
    vars.push_back(entry);
  }
  doc["vars"] = vars;
  return doc.dump(2) + "\n";
}

Encoding layout_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  Encoding enc;
  enc.kind = encoding_kind_from_name(doc.at("encoding").get<std::string>());
  enc.chain_length = doc.at("chain_length").get<int>();
  enc.num_vars = doc.at("nvars").get<int>();
  enc.num_info_bits = doc.at("info_bits").get<int>();
  enc.constant = doc.at("constant").get<long long>();
  enc.vars.resize(enc.num_vars + 1);
  for (const auto& entry : doc.at("vars")) {
    const int v = entry.at("var").get<int>();
    VarInfo info;
    info.role = role_from_name(entry.at("role").get<std::string>());
    switch (info.role) {
      case VarRole::Info: break;
      case VarRole::Slack:
        info.i = entry.at("pair")[0].get<int>();
        info.j = entry.at("pair")[1].get<int>();
        info.k = entry.at("bit").get<int>();
        break;
      case VarRole::Omega:
      case VarRole::Gadget:
        info.i = entry.at("pair")[0].get<int>();
        info.j = entry.at("pair")[1].get<int>();
        break;
      case VarRole::DiamondSite:
        info.i = entry.at("amino").get<int>();
        info.x = entry.at("point")[0].get<int>();
        info.y = entry.at("point")[1].get<int>();
        break;
    }
    enc.vars.at(v) = info;
  }
  return enc;
}

}  // namespace latfold
