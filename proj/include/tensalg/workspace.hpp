#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tensalg/fsemilattice.hpp"

namespace tensalg {

struct FslEntry {
  std::string name;
  std::string module;
  std::vector<int> F;
  FslPtr fsl;
};

// Named, validated objects loaded from a JSON document. Insertion order is
// kept so that printing reproduces the file.
class Workspace {
 public:
  void add_quantale(QuantalePtr q);
  void add_module(TableModulePtr m, const std::string& quantale);
  void add_frame(FramePtr f);
  void add_fsl(FslEntry e);

  QuantalePtr quantale(const std::string& name) const;
  TableModulePtr module(const std::string& name) const;
  FramePtr frame(const std::string& name) const;
  const FslEntry& fsl(const std::string& name) const;

  const std::vector<QuantalePtr>& quantales() const { return quantales_; }
  const std::vector<std::pair<TableModulePtr, std::string>>& modules() const { return modules_; }
  const std::vector<FramePtr>& frames() const { return frames_; }
  const std::vector<FslEntry>& fsls() const { return fsls_; }

 private:
  void claim(const std::string& name);
  std::vector<std::string> names_;
  std::vector<QuantalePtr> quantales_;
  std::vector<std::pair<TableModulePtr, std::string>> modules_;
  std::vector<FramePtr> frames_;
  std::vector<FslEntry> fsls_;
};

Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);
nlohmann::ordered_json to_json(const Workspace& ws);

// Exports a derived F-semilattice (any enumerable module) as explicit tables.
FslEntry export_fsl(const FSemilattice& H, const std::string& name, const std::string& module_name);
TableModulePtr export_module(const Module& M, const std::string& name);

}  // namespace tensalg
