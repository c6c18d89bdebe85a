#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "dissrho/canonical.hpp"
#include "dissrho/graph.hpp"

namespace dissrho {

enum class EnumMode { kConnected, kTrees, kAll };

std::string mode_name(EnumMode mode);

enum class EnumStrategy {
  /// Canonical augmentation: a child is kept only when its new vertex is equivalent to the
  /// designated deletion vertex, so each class is produced from exactly one parent.
  kOrderly,
  /// Every extension of every parent, deduplicated through a global set of canonical forms.
  kHashSet,
};

struct EnumOptions {
  EnumStrategy strategy = EnumStrategy::kOrderly;
  int workers = 1;  ///< 0 means hardware concurrency
};

inline constexpr int kMaxConnectedOrder = 9;
inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxAllOrder = 9;

/// One representative per isomorphism class, held as canonical forms sorted ascending, so two
/// runs give identical sequences regardless of worker count.
class EnumStream {
 public:
  EnumStream(int order, EnumMode mode, std::vector<CanonicalForm> forms);

  int order() const { return order_; }
  EnumMode mode() const { return mode_; }
  std::size_t size() const { return forms_.size(); }
  bool empty() const { return forms_.empty(); }
  const std::vector<CanonicalForm>& forms() const { return forms_; }
  /// The canonical representative of class i.
  Graph graph(std::size_t i) const;
  std::vector<Graph> graphs() const;

 private:
  int order_;
  EnumMode mode_;
  std::vector<CanonicalForm> forms_;
};

EnumStream connected_graphs(int n, const EnumOptions& options = {});
EnumStream free_trees(int n, const EnumOptions& options = {});
EnumStream all_graphs(int n, const EnumOptions& options = {});
EnumStream enumerate(int n, EnumMode mode, const EnumOptions& options = {});

/// Classes of order parents.order() + 1 grown from `parents`, which must hold every class of
/// its order and mode.
EnumStream extend(const EnumStream& parents, const EnumOptions& options = {});

/// Free trees from rooted level sequences (successor rule of Beyer and Hedetniemi), deduplicated
/// by canonical form. Independent of the augmentation code.
EnumStream free_trees_by_level_sequences(int n);

/// Members with dissociation number k.
EnumStream filter_by_diss(const EnumStream& stream, int k, int workers = 1);

void write_stream(std::ostream& out, const EnumStream& stream);

}  // namespace dissrho
