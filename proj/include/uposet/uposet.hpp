#pragma once

#include <uposet/antichain_embed.hpp>
#include <uposet/chain_family.hpp>
#include <uposet/dilworth.hpp>
#include <uposet/embedding.hpp>
#include <uposet/enumerate.hpp>
#include <uposet/errors.hpp>
#include <uposet/io.hpp>
#include <uposet/partitions.hpp>
#include <uposet/poset.hpp>
#include <uposet/set_family.hpp>
#include <uposet/subset_mask.hpp>
#include <uposet/universal.hpp>
