#include "rlmc/resource_vector.hpp"

#include <cassert>
#include <sstream>

namespace rlmc {

bool vec_leq(const ResourceVector& a, const ResourceVector& b) {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool vec_lt(const ResourceVector& a, const ResourceVector& b) {
  return vec_leq(a, b) && a != b;
}

ResourceVector vec_add(const ResourceVector& a, const ResourceVector& b) {
  assert(a.size() == b.size());
  ResourceVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ResourceVector vec_sub(const ResourceVector& a, const ResourceVector& b) {
  assert(a.size() == b.size());
  ResourceVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool vec_nonneg(const ResourceVector& a) {
  for (int x : a)
    if (x < 0) return false;
  return true;
}

std::string vec_to_string(const ResourceVector& a) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ')';
  return os.str();
}

}  // namespace rlmc
