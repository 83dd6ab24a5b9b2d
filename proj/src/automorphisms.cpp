#include "tiled/automorphisms.hpp"

#include <algorithm>
#include <future>
#include <tuple>

#include "tiled/error.hpp"

namespace tiled {

bool is_quiver_automorphism(const Quiver& q, const Perm& sigma) {
  if (sigma.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, {q.size(), sigma.size()});
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      if (q.has_arrow(i, j) != q.has_arrow(sigma(i), sigma(j))) return false;
  return true;
}

namespace {

using Profile = std::tuple<std::size_t, std::size_t, bool>;

std::vector<Profile> profiles(const Quiver& q) {
  std::vector<Profile> out;
  out.reserve(q.size());
  for (std::size_t v = 0; v < q.size(); ++v)
    out.emplace_back(q.in_degree(v), q.out_degree(v), q.has_loop(v));
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Quiver& from, const Quiver& to)
      : from_(from), to_(to), from_profile_(profiles(from)), to_profile_(profiles(to)) {}

  // Every isomorphism with vertex 0 mapped to `first`.
  std::vector<Perm> rooted_at(std::size_t first) const {
    std::vector<Perm> found;
    std::vector<std::size_t> image(from_.size());
    std::vector<bool> used(from_.size(), false);
    if (admissible(0, first, image)) {
      image[0] = first;
      used[first] = true;
      extend(1, image, used, found);
    }
    return found;
  }

 private:
  bool admissible(std::size_t v, std::size_t w, const std::vector<std::size_t>& image) const {
    if (from_profile_[v] != to_profile_[w]) return false;
    if (from_.has_loop(v) != to_.has_loop(w)) return false;
    for (std::size_t u = 0; u < v; ++u) {
      if (from_.has_arrow(v, u) != to_.has_arrow(w, image[u])) return false;
      if (from_.has_arrow(u, v) != to_.has_arrow(image[u], w)) return false;
    }
    return true;
  }

  void extend(std::size_t v, std::vector<std::size_t>& image, std::vector<bool>& used,
              std::vector<Perm>& found) const {
    if (v == from_.size()) {
      found.push_back(Perm::from_image(image));
      return;
    }
    for (std::size_t w = 0; w < to_.size(); ++w) {
      if (used[w] || !admissible(v, w, image)) continue;
      image[v] = w;
      used[w] = true;
      extend(v + 1, image, used, found);
      used[w] = false;
    }
  }

  const Quiver& from_;
  const Quiver& to_;
  std::vector<Profile> from_profile_;
  std::vector<Profile> to_profile_;
};

}  // namespace

std::vector<Perm> quiver_isomorphisms(const Quiver& from, const Quiver& to,
                                      const SearchOptions& options) {
  const std::size_t n = from.size();
  if (to.size() != n) throw Error(ErrorKind::DimensionMismatch, {n, to.size()});
  if (n > options.max_n) {
    throw Error(ErrorKind::TooLarge, {n, options.max_n},
                "search over S_n refused; raise the size limit");
  }
  if (n == 0) return {Perm::identity(0)};

  const IsomorphismSearch search(from, to);
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, n);
  std::vector<std::vector<Perm>> buckets(n);

  if (workers == 1) {
    for (std::size_t first = 0; first < n; ++first) buckets[first] = search.rooted_at(first);
  } else {
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t first = w; first < n; first += workers)
          buckets[first] = search.rooted_at(first);
      }));
    }
    for (auto& task : tasks) task.get();
  }

  std::vector<Perm> out;
  for (auto& bucket : buckets) out.insert(out.end(), bucket.begin(), bucket.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> quiver_automorphisms(const Quiver& q, const SearchOptions& options) {
  return quiver_isomorphisms(q, q, options);
}

}  // namespace tiled
