#pragma once

#include <map>
#include <string>
#include <vector>

#include "stod/matrix.hpp"

namespace stod {

// Single-file text archive of named numeric tensors plus a string
// manifest. Values are written with %.17g, so doubles round-trip exactly.
class TensorArchive {
 public:
  void put_meta(const std::string& key, const std::string& value);
  bool has_meta(const std::string& key) const;
  const std::string& meta(const std::string& key) const;  // throws naming the key
  const std::map<std::string, std::string>& all_meta() const { return meta_; }
  void erase_meta_prefix(const std::string& prefix);

  void put_tensor(const std::string& name, const Matrix& m);
  void put_vector(const std::string& name, const Vector& v);
  void put_scalar(const std::string& name, double v);
  bool has_tensor(const std::string& name) const;
  const Matrix& tensor(const std::string& name) const;  // throws naming the tensor
  Vector vector_tensor(const std::string& name) const;
  double scalar(const std::string& name) const;

  void save(const std::string& path) const;
  static TensorArchive load(const std::string& path);

 private:
  struct Entry {
    int rank = 2;  // 0 scalar, 1 vector, 2 matrix; stored for faithful round-trips
    Matrix data;
  };
  std::map<std::string, std::string> meta_;
  std::map<std::string, Entry> tensors_;
};

// Exclusive ownership of a directory via an O_EXCL lock file, released on
// destruction.
class DirLock {
 public:
  explicit DirLock(const std::string& dir);
  ~DirLock();
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  std::string path_;
};

}  // namespace stod
