# -*- coding: utf-8 -*-
from achievable_region.commands import bench, check, compute, gen, query

# 子命令注册顺序即帮助信息中的展示顺序
COMMANDS = (compute, check, gen, query, bench)
