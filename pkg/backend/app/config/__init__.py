from .settings import CONFIG_DIR, Settings, get_settings, load_defaults, load_graph_schema

__all__ = ['CONFIG_DIR', 'Settings', 'get_settings', 'load_defaults', 'load_graph_schema']
