#include "relcap/enumeration.hpp"

#include <algorithm>

#include "relcap/errors.hpp"

namespace relcap {

DomainSpec DomainSpec::of(int n) {
  if (n < 0) throw UsageError("domain size must be nonnegative");
  DomainSpec d;
  d.size = n;
  return d;
}

DomainSpec DomainSpec::named(std::vector<std::string> names) {
  DomainSpec d;
  d.size = static_cast<int>(names.size());
  d.names = std::move(names);
  for (std::size_t i = 0; i < d.names.size(); ++i)
    for (std::size_t j = i + 1; j < d.names.size(); ++j)
      if (d.names[i] == d.names[j]) throw UsageError("domain names must be distinct");
  return d;
}

std::vector<Value> DomainSpec::values() const {
  std::vector<Value> out(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

std::string DomainSpec::name_of(Value v) const {
  if (v >= 0 && static_cast<std::size_t>(v) < names.size())
    return names[static_cast<std::size_t>(v)];
  return "v" + std::to_string(v);
}

InstanceStream::InstanceStream(SchemaDesc schema, std::vector<Value> universe, EnumLimits limits)
    : schema_(std::move(schema)), universe_(std::move(universe)), limits_(limits) {
  validate_schema(schema_);
  if (!std::is_sorted(universe_.begin(), universe_.end()) ||
      std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
    throw UsageError("enumeration universe must be sorted and distinct");

  const int n = static_cast<int>(universe_.size());
  int positions = 1;
  for (int i = 0; i < schema_.arity; ++i) {
    if (positions > (1 << 27) / (n == 0 ? 1 : n)) throw ResourceError(~std::uint64_t(0), limits_.node_budget);
    positions *= n;
  }
  total_ = positions;

  candidates_.reserve(static_cast<std::size_t>(total_));
  std::vector<int> digits(static_cast<std::size_t>(schema_.arity), 0);
  std::vector<Value> comps(static_cast<std::size_t>(schema_.arity));
  for (int idx = 0; idx < total_; ++idx) {
    int rest = idx;
    for (int pos = schema_.arity - 1; pos >= 0; --pos) {
      digits[static_cast<std::size_t>(pos)] = rest % n;
      rest /= n;
    }
    for (int pos = 0; pos < schema_.arity; ++pos)
      comps[static_cast<std::size_t>(pos)] = universe_[static_cast<std::size_t>(digits[static_cast<std::size_t>(pos)])];
    candidates_.push_back(Tuple::of(comps));
  }

  max_size_ = total_;
  key_codes_.resize(schema_.keys.size());
  key_used_.resize(schema_.keys.size());
  for (std::size_t j = 0; j < schema_.keys.size(); ++j) {
    const auto& cols = schema_.keys[j].columns;
    int span = 1;
    for (std::size_t c = 0; c < cols.size(); ++c) span *= (n == 0 ? 1 : n);
    // A key admits at most one tuple per projection code, which bounds the
    // largest reachable instance and with it the number of size passes.
    max_size_ = std::min(max_size_, span);
    key_codes_[j].resize(static_cast<std::size_t>(total_));
    key_used_[j].assign(static_cast<std::size_t>(span), 0);
    for (int idx = 0; idx < total_; ++idx) {
      int code = 0;
      for (int col : cols) {
        Value v = candidates_[static_cast<std::size_t>(idx)].col(col);
        int digit = static_cast<int>(std::lower_bound(universe_.begin(), universe_.end(), v) -
                                     universe_.begin());
        code = code * n + digit;
      }
      key_codes_[j][static_cast<std::size_t>(idx)] = code;
    }
  }

  target_ = 0;
  cursor_ = 0;
  exhausted_ = false;
}

bool InstanceStream::keys_admit(int cand) const {
  for (std::size_t j = 0; j < key_codes_.size(); ++j)
    if (key_used_[j][static_cast<std::size_t>(key_codes_[j][static_cast<std::size_t>(cand)])])
      return false;
  return true;
}

void InstanceStream::mark(int cand, bool used) {
  for (std::size_t j = 0; j < key_codes_.size(); ++j)
    key_used_[j][static_cast<std::size_t>(key_codes_[j][static_cast<std::size_t>(cand)])] =
        used ? 1 : 0;
}

bool InstanceStream::backtrack() {
  if (chosen_.empty()) {
    ++target_;
    cursor_ = 0;
    if (target_ > max_size_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }
  int last = chosen_.back();
  mark(last, false);
  chosen_.pop_back();
  cursor_ = last + 1;
  return true;
}

Instance InstanceStream::make_current() const {
  std::vector<Tuple> tuples;
  tuples.reserve(chosen_.size());
  for (int idx : chosen_) tuples.push_back(candidates_[static_cast<std::size_t>(idx)]);
  return Instance::of(schema_.arity, std::move(tuples));
}

std::optional<Instance> InstanceStream::next() {
  while (!exhausted_) {
    if (static_cast<int>(chosen_.size()) == target_) {
      Instance inst = make_current();
      bool ok = true;
      for (const InclusionDependency& d : schema_.inds)
        if (!satisfies_ind(inst, d)) {
          ok = false;
          break;
        }
      backtrack();
      if (ok) return inst;
      continue;
    }
    const int missing = target_ - static_cast<int>(chosen_.size());
    if (cursor_ > total_ - missing) {
      backtrack();
      continue;
    }
    if (keys_admit(cursor_)) {
      if (++explored_ > limits_.node_budget) throw ResourceError(explored_, limits_.node_budget);
      mark(cursor_, true);
      chosen_.push_back(cursor_);
    }
    ++cursor_;
  }
  return std::nullopt;
}

InstanceStream enumerate_instances(const SchemaDesc& schema, const DomainSpec& dom,
                                   EnumLimits limits) {
  return InstanceStream(schema, dom.values(), limits);
}

InstanceStream enumerate_instances_over(const SchemaDesc& schema, std::vector<Value> universe,
                                        EnumLimits limits) {
  return InstanceStream(schema, std::move(universe), limits);
}

namespace {

void precheck_full_consumption(const SchemaDesc& schema, int universe_size, EnumLimits limits) {
  if (!schema.keys.empty()) return;  // keys prune; the dynamic budget governs
  std::uint64_t positions = 1;
  for (int i = 0; i < schema.arity; ++i) positions *= static_cast<std::uint64_t>(universe_size);
  if (positions >= 63) throw ResourceError(~std::uint64_t(0), limits.node_budget);
  std::uint64_t subsets = std::uint64_t(1) << positions;
  if (subsets > limits.node_budget) throw ResourceError(subsets, limits.node_budget);
}

}  // namespace

std::vector<Instance> collect_instances(const SchemaDesc& schema, const DomainSpec& dom,
                                        EnumLimits limits) {
  precheck_full_consumption(schema, dom.size, limits);
  InstanceStream stream = enumerate_instances(schema, dom, limits);
  std::vector<Instance> out;
  while (auto inst = stream.next()) out.push_back(std::move(*inst));
  return out;
}

BigCount count_instances(const SchemaDesc& schema, const DomainSpec& dom, EnumLimits limits) {
  precheck_full_consumption(schema, dom.size, limits);
  InstanceStream stream = enumerate_instances(schema, dom, limits);
  BigCount count = 0;
  while (stream.next()) ++count;
  return count;
}

std::vector<Permutation> permutations_fixing(const std::vector<Value>& carrier,
                                             const std::vector<Value>& fixed) {
  std::vector<Value> sorted_carrier = carrier;
  std::sort(sorted_carrier.begin(), sorted_carrier.end());
  sorted_carrier.erase(std::unique(sorted_carrier.begin(), sorted_carrier.end()),
                       sorted_carrier.end());
  for (Value v : fixed)
    if (!std::binary_search(sorted_carrier.begin(), sorted_carrier.end(), v))
      throw UsageError("fixed value outside permutation carrier");

  std::vector<Value> movable;
  for (Value v : sorted_carrier)
    if (!std::count(fixed.begin(), fixed.end(), v)) movable.push_back(v);
  if (movable.size() > 8)
    throw ResourceError(static_cast<std::uint64_t>(movable.size()), 8);

  std::vector<Permutation> out;
  std::vector<Value> arrangement = movable;
  do {
    std::vector<Value> image;
    image.reserve(sorted_carrier.size());
    std::size_t m = 0;
    for (Value v : sorted_carrier) {
      if (std::count(fixed.begin(), fixed.end(), v)) {
        image.push_back(v);
      } else {
        image.push_back(arrangement[m++]);
      }
    }
    out.push_back(Permutation::of(sorted_carrier, std::move(image)));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return out;
}

std::vector<Permutation> enumerate_permutations(const DomainSpec& dom,
                                                const std::vector<Value>& fixed) {
  return permutations_fixing(dom.values(), fixed);
}

}  // namespace relcap
