#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>

namespace hqc {

/// Write-once cache. The lock is not held while computing, so compute may
/// recurse into the same cache.
template <typename Key, typename Value>
class MemoCache {
public:
	template <typename Compute>
	const Value& get(const Key& key, Compute&& compute)
	{
		{
			std::shared_lock lock(mutex_);
			auto it = table_.find(key);
			if (it != table_.end())
				return it->second;
		}
		Value value = compute(key);
		std::unique_lock lock(mutex_);
		return table_.try_emplace(key, std::move(value)).first->second;
	}

	std::size_t size() const
	{
		std::shared_lock lock(mutex_);
		return table_.size();
	}

private:
	mutable std::shared_mutex mutex_;
	std::map<Key, Value> table_;
};

} // namespace hqc
