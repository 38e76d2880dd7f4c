from django.urls import path

from happ.app_views import count_view, expansion_view, structure_view, tableau_view

urlpatterns = [
    # Tableau endpoints
    path('api/enumerate/', tableau_view.api_enumerate, name='enumerate'),
    path('api/skew-enumerate/', tableau_view.api_enumerate_skew, name='skew_enumerate'),
    path('api/orbit/', tableau_view.api_orbit, name='orbit'),

    # Expansion endpoints
    path('api/qs/', expansion_view.api_quasisymmetric_schur, name='qs'),
    path('api/canonical/', expansion_view.api_canonical, name='canonical'),
    path('api/skew-qs/', expansion_view.api_skew_quasisymmetric_schur, name='skew_qs'),

    # Class, poset and module endpoints
    path('api/classes/', structure_view.api_classes, name='classes'),
    path('api/poset/', structure_view.api_poset, name='poset'),
    path('api/module/', structure_view.api_module, name='module'),

    # Count endpoints
    path('api/counts/', count_view.api_counts, name='counts'),
]
